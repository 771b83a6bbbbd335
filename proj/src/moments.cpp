#include "ti/moments.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ti/errors.hpp"
#include "ti/kernels.hpp"

namespace ti {

namespace {

constexpr int kMaxSupportedOrder = 16;

void check_order(int max_order) {
    if (max_order < 2)
        throw domain_error("maximum moment order must be at least 2");
    if (max_order > kMaxSupportedOrder)
        throw domain_error("maximum moment order is limited to 16");
}

std::string triple_name(int p, int q, int r) {
    return std::to_string(p) + "_" + std::to_string(q) + "_" + std::to_string(r);
}

MomentTensor tensor_from_sums(const std::vector<std::array<int, 3>>& idx,
                              const std::vector<double>& sums, int max_order) {
    MomentTensor t(MomentKind::raw, max_order);
    for (std::size_t k = 0; k < idx.size(); ++k)
        t.set(idx[k][0], idx[k][1], idx[k][2], sums[k]);
    return t;
}

double binom(int n, int k) {
    double out = 1.0;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

} // namespace

double PointCloud::total_weight() const {
    double sum = 0;
    for (const Point& p : points) sum += p.w;
    return sum;
}

void VoxelGrid::validate() const {
    for (int d : dims)
        if (d < 1) throw domain_error("voxel grid dimensions must be positive");
    for (double s : spacing)
        if (!(s > 0)) throw domain_error("voxel spacing must be positive");
    const std::size_t expected = static_cast<std::size_t>(dims[0]) *
                                 static_cast<std::size_t>(dims[1]) *
                                 static_cast<std::size_t>(dims[2]);
    if (values.size() != expected)
        throw domain_error("voxel value count does not match dimensions");
}

const char* moment_kind_name(MomentKind kind) {
    switch (kind) {
        case MomentKind::raw: return "raw";
        case MomentKind::central: return "central";
        case MomentKind::normalized: return "normalized";
    }
    return "?";
}

MomentKind moment_kind_from_name(const std::string& name) {
    if (name == "raw") return MomentKind::raw;
    if (name == "central") return MomentKind::central;
    if (name == "normalized") return MomentKind::normalized;
    throw parse_error("unknown moment kind \"" + name + "\"");
}

MomentTensor::MomentTensor(MomentKind kind, int max_order)
    : _kind(kind), _max_order(max_order) {
    check_order(max_order);
}

bool MomentTensor::contains(int p, int q, int r) const {
    return _entries.find({p, q, r}) != _entries.end();
}

double MomentTensor::at(int p, int q, int r) const {
    auto it = _entries.find({p, q, r});
    if (it == _entries.end())
        throw domain_error("moment tensor has no entry " + triple_name(p, q, r));
    return it->second;
}

void MomentTensor::set(int p, int q, int r, double value) {
    if (p < 0 || q < 0 || r < 0 || p + q + r > _max_order)
        throw domain_error("moment index " + triple_name(p, q, r) + " out of range");
    _entries[{p, q, r}] = value;
}

MomentTensor raw_moments(const PointCloud& cloud, int max_order) {
    check_order(max_order);
    if (cloud.points.empty()) throw domain_error("empty point cloud");
    const std::size_t n = cloud.points.size();
    std::vector<double> xs(n), ys(n), zs(n), ws(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = cloud.points[i].x;
        ys[i] = cloud.points[i].y;
        zs[i] = cloud.points[i].z;
        ws[i] = cloud.points[i].w;
    }
    const auto idx = moment_index_set(max_order);
    std::vector<double> sums(idx.size());
    select_kernel().accumulate(xs.data(), ys.data(), zs.data(), ws.data(), n, max_order,
                               sums.data());
    return tensor_from_sums(idx, sums, max_order);
}

MomentTensor raw_moments(const VoxelGrid& grid, int max_order) {
    check_order(max_order);
    grid.validate();
    const double cell = grid.spacing[0] * grid.spacing[1] * grid.spacing[2];
    PointCloud cloud;
    cloud.points.reserve(grid.values.size());
    std::size_t v = 0;
    for (int k = 0; k < grid.dims[2]; ++k)
        for (int j = 0; j < grid.dims[1]; ++j)
            for (int i = 0; i < grid.dims[0]; ++i) {
                Point p;
                p.x = grid.origin[0] + (i + 0.5) * grid.spacing[0];
                p.y = grid.origin[1] + (j + 0.5) * grid.spacing[1];
                p.z = grid.origin[2] + (k + 0.5) * grid.spacing[2];
                p.w = grid.values[v++] * cell;
                cloud.points.push_back(p);
            }
    return raw_moments(cloud, max_order);
}

MomentTensor central_moments(const MomentTensor& raw) {
    if (raw.kind() != MomentKind::raw)
        throw domain_error("central moments are computed from a raw tensor");
    const double m000 = raw.at(0, 0, 0);
    if (!(m000 > 0)) throw domain_error("non-positive total mass");
    const double cx = raw.at(1, 0, 0) / m000;
    const double cy = raw.at(0, 1, 0) / m000;
    const double cz = raw.at(0, 0, 1) / m000;

    MomentTensor central(MomentKind::central, raw.max_order());
    for (const auto& [pqr, unused] : raw.entries()) {
        (void)unused;
        const int p = pqr[0], q = pqr[1], r = pqr[2];
        double mu = 0;
        for (int i = 0; i <= p; ++i)
            for (int j = 0; j <= q; ++j)
                for (int k = 0; k <= r; ++k)
                    mu += binom(p, i) * binom(q, j) * binom(r, k) *
                          std::pow(-cx, p - i) * std::pow(-cy, q - j) *
                          std::pow(-cz, r - k) * raw.at(i, j, k);
        central.set(p, q, r, mu);
    }
    return central;
}

MomentTensor normalized_moments(const MomentTensor& central) {
    if (central.kind() != MomentKind::central)
        throw domain_error("normalized moments are computed from a central tensor");
    const double mu000 = central.at(0, 0, 0);
    if (!(mu000 > 0)) throw domain_error("non-positive total mass");
    MomentTensor eta(MomentKind::normalized, central.max_order());
    for (const auto& [pqr, mu] : central.entries()) {
        const int order = pqr[0] + pqr[1] + pqr[2];
        if (order < 2) continue;
        eta.set(pqr[0], pqr[1], pqr[2], mu / std::pow(mu000, 1.0 + order / 3.0));
    }
    return eta;
}

double evaluate_invariant(const NamedInvariant& inv, const MomentTensor& normalized) {
    if (normalized.kind() != MomentKind::normalized)
        throw domain_error("invariants are evaluated on normalized moments");
    if (normalized.max_order() < inv.order)
        throw domain_error("moment tensor of order " + std::to_string(normalized.max_order()) +
                           " cannot evaluate " + inv.name + " (needs order " +
                           std::to_string(inv.order) + ")");
    std::map<Variable, std::complex<double>> assignment;
    for (const Variable& v : inv.polynomial.variables()) {
        if (!v.is_moment())
            throw domain_error("invariant " + inv.name + " contains a template variable");
        assignment.emplace(v, normalized.at(v.j(), v.k(), v.l()));
    }
    const std::complex<double> value = inv.polynomial.eval(assignment);
    if (std::abs(value.imag()) >= 1e-12 * (1.0 + std::abs(value.real())))
        throw domain_error("invariant " + inv.name + " evaluated to a non-real value");
    return value.real();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        const auto begin = field.find_first_not_of(" \t\r");
        if (begin == std::string::npos) {
            fields.emplace_back();
        } else {
            const auto end = field.find_last_not_of(" \t\r");
            fields.push_back(field.substr(begin, end - begin + 1));
        }
    }
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_double(const std::string& text, const std::string& where) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || end != begin + text.size())
        throw parse_error(where + ": expected a number, got \"" + text + "\"");
    return value;
}

} // namespace

PointCloud load_point_cloud_csv(std::istream& in, const std::string& origin_name) {
    std::string line;
    if (!std::getline(in, line))
        throw parse_error(origin_name + ": missing header line");
    const auto header = split_csv_line(line);
    const bool xyz = header.size() >= 3 && header[0] == "x" && header[1] == "y" &&
                     header[2] == "z";
    bool has_weight = false;
    if (xyz && header.size() == 4 && header[3] == "w")
        has_weight = true;
    else if (!(xyz && header.size() == 3))
        throw parse_error(origin_name + ": header must be \"x,y,z\" or \"x,y,z,w\"");

    PointCloud cloud;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto fields = split_csv_line(line);
        const std::string where = origin_name + " line " + std::to_string(line_no);
        if (fields.size() != header.size())
            throw parse_error(where + ": expected " + std::to_string(header.size()) +
                              " fields, got " + std::to_string(fields.size()));
        Point p;
        p.x = parse_double(fields[0], where);
        p.y = parse_double(fields[1], where);
        p.z = parse_double(fields[2], where);
        p.w = has_weight ? parse_double(fields[3], where) : 1.0;
        cloud.points.push_back(p);
    }
    if (cloud.points.empty()) throw domain_error(origin_name + ": empty point cloud");
    return cloud;
}

PointCloud load_point_cloud_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return load_point_cloud_csv(in, path);
}

} // namespace ti
