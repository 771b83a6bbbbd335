#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ti/moments.hpp"
#include "ti/templates.hpp"

namespace ti {

// SplitMix64 stream. Verification draws are keyed per trial via
// stream_seed, so trial t always sees the same values no matter how many
// other streams were consumed (counter-based contract).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : _state(seed) {}

    std::uint64_t next();
    double uniform();                         // [0, 1)
    double uniform(double lo, double hi);
    double gaussian();                        // standard normal (Box-Muller)

private:
    std::uint64_t _state;
    bool _have_spare = false;
    double _spare = 0;
};

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);

struct Rotation {
    std::array<std::array<double, 3>, 3> m{};

    static Rotation identity();
    std::array<double, 3> apply(const std::array<double, 3>& v) const;
};

// Uniform rotation via a normalized 4-Gaussian quaternion; deterministic
// for fixed (seed, draw).
Rotation random_rotation(std::uint64_t seed, std::uint64_t draw);
Rotation random_rotation(SplitMix64& rng);

// z-x-z Euler product, the alternative generator used for cross-checks.
Rotation euler_rotation(double psi, double theta, double phi);

// Maps every point to scale*R*p + t and multiplies weights by scale^3 (the
// pushforward of a sampled density, whose mass scales with volume).
// scale <= 0 raises domain_error.
PointCloud transform_cloud(const PointCloud& cloud, const Rotation& r,
                           const std::array<double, 3>& t, double scale);

// True when the cloud has no 4 points spanning a full tetrahedron
// (coincident/collinear/coplanar at 1e-12 of the cloud diameter).
bool is_degenerate_cloud(const PointCloud& cloud);

struct InvariantDeviation {
    std::string name;
    double baseline = 0;
    double max_abs_dev = 0;
    double max_rel_dev = 0;
    bool pass = false;
};

struct InvarianceReport {
    std::uint64_t seed = 0;
    int trials = 0;
    double tolerance = 0;
    bool degenerate = false;
    std::vector<InvariantDeviation> invariants;
    bool all_pass = true;
};

// Evaluates every invariant on the cloud and on `trials` random similarity
// transforms (uniform rotation, translation in [-10,10]^3, scale in
// [0.1,10]); an invariant passes when its max relative deviation stays
// within tolerance (absolute deviation <= 1e-12 when |baseline| < 1e-9).
InvarianceReport invariance_report(const PointCloud& cloud,
                                   const std::vector<NamedInvariant>& invs, int trials,
                                   double tolerance, std::uint64_t seed);

struct SelfCheckEntry {
    std::string name;
    bool pass = true;
    std::string detail; // failure description, empty on pass
};

struct SelfCheckReport {
    std::vector<SelfCheckEntry> checks;
    bool all_pass = true;
    int failures() const;
};

// The exact symbolic suite: commutators and operator identities, standard
// basis relations, module decompositions, Laplace eigenspaces with the
// fixed eigenvector coordinates, degree-one invariants, both order-3
// generation paths, cross-set proportionality, Jacobian rank, series
// coefficients, and generator counts. Failures are report entries, never
// exceptions. Passing a modified library turns template corruption into
// named failures.
SelfCheckReport run_self_check(const TemplateLibrary& lib = TemplateLibrary::builtin());

} // namespace ti
