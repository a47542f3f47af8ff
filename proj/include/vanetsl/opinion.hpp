#pragma once

#include <span>
#include <string>

namespace vanetsl {

// Binomial subjective-logic opinion: belief, disbelief, uncertainty and
// base rate. Well-formed opinions satisfy belief + disbelief + uncertainty
// = 1 with every component in [0, 1]. The base rate defaults to 1/2
// everywhere in this project.
struct Opinion {
    double belief = 0.0;
    double disbelief = 0.0;
    double uncertainty = 1.0;
    double base_rate = 0.5;

    bool operator==(const Opinion&) const = default;
};

inline constexpr double kOpinionTolerance = 1e-9;

// True iff all opinion invariants hold at kOpinionTolerance.
bool validate(const Opinion& op, double tol = kOpinionTolerance);

// Checked constructor. Small floating-point drift in b + d + u (up to 1e-6)
// is repaired by renormalizing the three mass components; anything larger
// is treated as a logic bug and rejected with std::invalid_argument.
Opinion make_opinion(double belief, double disbelief, double uncertainty,
                     double base_rate = 0.5);

// The opinion carrying no evidence: (0, 0, 1, base_rate).
Opinion vacuous(double base_rate = 0.5);

// Projected probability E = b + u * a. Throws std::domain_error for an
// invalid opinion.
double expectation(const Opinion& op);

// Cumulative (consensus) fusion of two independent opinions about the same
// statement. Requires valid inputs with equal base rates. When both inputs
// are dogmatic (u_A = u_B = 0) the normalizer k vanishes; that case returns
// the componentwise average of the two opinions.
Opinion fuse(const Opinion& a, const Opinion& b);

// Left fold of fuse. Empty input yields vacuous(1/2); a single opinion is
// returned unchanged.
Opinion fuse_all(std::span<const Opinion> ops);

// "belief,disbelief,uncertainty,base_rate" with 9 significant digits.
std::string opinion_csv(const Opinion& op);

}  // namespace vanetsl
