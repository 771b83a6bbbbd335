#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ti/invariants.hpp"

namespace ti {

struct Point {
    double x = 0, y = 0, z = 0;
    double w = 1;
};

struct PointCloud {
    std::vector<Point> points;
    double total_weight() const;
};

// Dense density samples; values in x-fastest order, cell centers at
// origin + (index + 1/2) * spacing.
struct VoxelGrid {
    std::array<int, 3> dims{};
    std::array<double, 3> spacing{};
    std::array<double, 3> origin{};
    std::vector<double> values;

    void validate() const; // throws domain_error on inconsistent fields
};

enum class MomentKind { raw, central, normalized };

const char* moment_kind_name(MomentKind kind);
MomentKind moment_kind_from_name(const std::string& name); // throws parse_error

// Moments keyed by exponent triple. raw and central tensors carry every
// entry with p+q+r <= max_order; normalized tensors carry 2 <= p+q+r only
// (the lower entries are 1 and 0 by construction).
class MomentTensor {
public:
    MomentTensor(MomentKind kind, int max_order);

    MomentKind kind() const { return _kind; }
    int max_order() const { return _max_order; }

    bool contains(int p, int q, int r) const;
    double at(int p, int q, int r) const; // throws domain_error when absent
    void set(int p, int q, int r, double value);

    const std::map<std::array<int, 3>, double>& entries() const { return _entries; }

private:
    MomentKind _kind;
    int _max_order;
    std::map<std::array<int, 3>, double> _entries;
};

// Weighted power sums over the cloud (exact quadrature for atomic
// measures), pairwise-summed via the selected kernel. 2 <= max_order <= 16.
MomentTensor raw_moments(const PointCloud& cloud, int max_order);

// Midpoint-rule quadrature: each cell contributes value * cell volume at
// its center.
MomentTensor raw_moments(const VoxelGrid& grid, int max_order);

// Central moments about the centroid via the binomial shift expansion of
// the raw tensor; no re-traversal of the data. m000 <= 0 raises
// domain_error("non-positive total mass").
MomentTensor central_moments(const MomentTensor& raw);

// eta_{p,q,r} = mu_{p,q,r} / mu_000^{1+(p+q+r)/3} for 2 <= p+q+r.
MomentTensor normalized_moments(const MomentTensor& central);

// Evaluates the invariant on the normalized tensor. The imaginary part of
// the evaluation must vanish to within 1e-12*(1+|re|) and is discarded.
double evaluate_invariant(const NamedInvariant& inv, const MomentTensor& normalized);

// CSV with header "x,y,z,w" (w optional, default weight 1), one point per
// line. Parse failures name the line; a header-only file is a domain error
// (empty cloud).
PointCloud load_point_cloud_csv(std::istream& in, const std::string& origin_name);
PointCloud load_point_cloud_csv_file(const std::string& path);

} // namespace ti
