#include "fq/lie.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>

namespace fq {

int GroupSpec::ambient_dim() const {
    int d = 0;
    for (const auto& f : factors) d += f.ambient_dim();
    return d;
}

int GroupSpec::total_rank() const {
    int r = 0;
    for (const auto& f : factors) r += f.rank();
    return r;
}

std::string GroupSpec::signature() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << '|';
        switch (factors[i].kind) {
            case FactorKind::Torus: os << 'T'; break;
            case FactorKind::U: os << 'U'; break;
            case FactorKind::SU: os << "SU"; break;
        }
        os << factors[i].n;
    }
    return os.str();
}

void GroupSpec::validate() const {
    if (factors.empty()) throw InvalidInput("group has no factors");
    for (const auto& f : factors) {
        if (f.kind == FactorKind::SU && f.n < 2)
            throw InvalidInput("SU(n) requires n >= 2");
        if (f.kind != FactorKind::SU && f.n < 1)
            throw InvalidInput("factor rank must be >= 1");
    }
    if (total_rank() < 1) throw InvalidInput("total rank must be >= 1");
}

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

Weight Weight::operator*(std::int64_t k) const {
    Weight r = *this;
    for (auto& c : r.coords) c *= k;
    return r;
}

std::int64_t Weight::dot(const Weight& o) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) s += coords[i] * o.coords[i];
    return s;
}

std::int64_t Weight::norm_sq() const { return dot(*this); }

std::string Weight::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ',';
        os << coords[i];
    }
    os << ')';
    return os.str();
}

namespace {

Weight unit(int dim, int i, std::int64_t v = 1) {
    Weight w(std::vector<std::int64_t>(dim, 0));
    w.coords[i] = v;
    return w;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

} // namespace

RootSystem::RootSystem(GroupSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    sig_ = spec_.signature();
    ambient_ = spec_.ambient_dim();
    delta_ = Weight(std::vector<std::int64_t>(ambient_, 0));

    int offset = 0;
    for (const auto& f : spec_.factors) {
        int d = f.ambient_dim();
        blocks_.emplace_back(offset, offset + d);
        if (f.kind == FactorKind::Torus) {
            // no roots
        } else if (f.kind == FactorKind::SU && f.n == 2) {
            simple_roots_.push_back(unit(ambient_, offset, 2));
            simple_coroots_.push_back(unit(ambient_, offset, 1));
            positive_roots_.push_back(unit(ambient_, offset, 2));
            weyl_order_ *= 2;
            delta_.coords[offset] = 1;
        } else {
            // U(n) and SU(n>=3): type A_{n-1} in n coordinates.
            for (int i = 0; i + 1 < f.n; ++i) {
                Weight a = unit(ambient_, offset + i) - unit(ambient_, offset + i + 1);
                simple_roots_.push_back(a);
                simple_coroots_.push_back(a);
            }
            for (int i = 0; i < f.n; ++i)
                for (int j = i + 1; j < f.n; ++j)
                    positive_roots_.push_back(unit(ambient_, offset + i) -
                                              unit(ambient_, offset + j));
            weyl_order_ *= factorial(f.n);
            for (int i = 0; i < f.n; ++i) delta_.coords[offset + i] = f.n - 1 - i;
        }
        offset += d;
    }

    // Lattice basis per factor: standard vectors, except SU(n>=3) where the
    // sum-zero lattice is spanned by the simple roots.
    offset = 0;
    for (const auto& f : spec_.factors) {
        int d = f.ambient_dim();
        if (f.kind == FactorKind::SU && f.n >= 3) {
            for (int i = 0; i + 1 < f.n; ++i)
                lattice_basis_.push_back(unit(ambient_, offset + i) -
                                         unit(ambient_, offset + i + 1));
        } else {
            for (int i = 0; i < d; ++i) lattice_basis_.push_back(unit(ambient_, offset + i));
        }
        offset += d;
    }
}

std::vector<std::int64_t> RootSystem::to_lattice_coords(const Weight& w) const {
    std::vector<std::int64_t> y;
    y.reserve(lattice_basis_.size());
    int offset = 0;
    for (const auto& f : spec_.factors) {
        int d = f.ambient_dim();
        if (f.kind == FactorKind::SU && f.n >= 3) {
            // Partial sums invert the simple-root basis on sum-zero vectors.
            std::int64_t acc = 0;
            for (int i = 0; i + 1 < f.n; ++i) {
                acc += w.coords[offset + i];
                y.push_back(acc);
            }
        } else {
            for (int i = 0; i < d; ++i) y.push_back(w.coords[offset + i]);
        }
        offset += d;
    }
    return y;
}

Weight RootSystem::from_lattice_coords(const std::vector<std::int64_t>& y) const {
    if (y.size() != lattice_basis_.size())
        throw InvalidInput("lattice coordinate count mismatch");
    Weight w(std::vector<std::int64_t>(ambient_, 0));
    for (std::size_t i = 0; i < y.size(); ++i)
        w = w + lattice_basis_[i] * y[i];
    return w;
}

Weight RootSystem::canonical(const Weight& w) const {
    if (static_cast<int>(w.size()) != ambient_)
        throw InvalidInput("weight has " + std::to_string(w.size()) +
                           " coordinates, group ambient dimension is " +
                           std::to_string(ambient_));
    Weight r = w;
    int offset = 0;
    for (const auto& f : spec_.factors) {
        int d = f.ambient_dim();
        if (f.kind == FactorKind::SU && f.n >= 3) {
            std::int64_t s = 0;
            for (int i = 0; i < d; ++i) s += r.coords[offset + i];
            if (s % f.n != 0)
                throw InvalidInput("SU(" + std::to_string(f.n) +
                                   ") block of " + w.to_string() +
                                   " has non-integral mean; not a lattice weight");
            std::int64_t m = s / f.n;
            for (int i = 0; i < d; ++i) r.coords[offset + i] -= m;
        }
        offset += d;
    }
    return r;
}

bool RootSystem::in_lattice_span(const Weight& w) const {
    if (static_cast<int>(w.size()) != ambient_) return false;
    int offset = 0;
    for (const auto& f : spec_.factors) {
        int d = f.ambient_dim();
        if (f.kind == FactorKind::SU && f.n >= 3) {
            std::int64_t s = 0;
            for (int i = 0; i < d; ++i) s += w.coords[offset + i];
            if (s != 0) return false;
        }
        offset += d;
    }
    return true;
}

std::int64_t RootSystem::pairing(const Weight& w, std::size_t i) const {
    return w.dot(simple_coroots_[i]);
}

Weight RootSystem::reflect(const Weight& w, std::size_t i) const {
    return w - simple_roots_[i] * pairing(w, i);
}

RootSystem build_root_system(const GroupSpec& spec) { return RootSystem(spec); }

bool is_dominant(const Weight& w, const RootSystem& rs) {
    for (std::size_t i = 0; i < rs.simple_coroots().size(); ++i)
        if (rs.pairing(w, i) < 0) return false;
    return true;
}

std::set<Weight> weyl_orbit(const Weight& w, const RootSystem& rs) {
    Weight start = rs.canonical(w);
    std::set<Weight> orbit{start};
    std::deque<Weight> queue{start};
    while (!queue.empty()) {
        Weight cur = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < rs.simple_roots().size(); ++i) {
            Weight next = rs.reflect(cur, i);
            if (orbit.insert(next).second) queue.push_back(next);
        }
    }
    return orbit;
}

std::optional<DominantRep> dominant_representative_raw(const Weight& w, const RootSystem& rs) {
    Weight cur = w;
    int parity = 1;
    for (;;) {
        bool moved = false;
        for (std::size_t i = 0; i < rs.simple_coroots().size(); ++i) {
            if (rs.pairing(cur, i) < 0) {
                cur = rs.reflect(cur, i);
                parity = -parity;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    for (std::size_t i = 0; i < rs.simple_coroots().size(); ++i)
        if (rs.pairing(cur, i) == 0) return std::nullopt;
    return DominantRep{cur, parity};
}

std::optional<DominantRep> dominant_representative(const Weight& w, const RootSystem& rs) {
    return dominant_representative_raw(rs.canonical(w), rs);
}

Weight dominant_in_orbit(const Weight& w, const RootSystem& rs) {
    Weight cur = w;
    for (;;) {
        bool moved = false;
        for (std::size_t i = 0; i < rs.simple_coroots().size(); ++i) {
            if (rs.pairing(cur, i) < 0) {
                cur = rs.reflect(cur, i);
                moved = true;
                break;
            }
        }
        if (!moved) return cur;
    }
}

double weight_norm(const Weight& w, const RootSystem& rs) {
    (void)rs;
    return std::sqrt(static_cast<double>(w.norm_sq()));
}

bool norm_triangle_le(std::int64_t a_sq, std::int64_t b_sq, std::int64_t c_sq) {
    // ||a|| <= ||b|| + ||c||  <=>  a_sq - b_sq - c_sq <= 2 ||b|| ||c||.
    BigInt lhs = BigInt(a_sq) - b_sq - c_sq;
    if (lhs <= 0) return true;
    return lhs * lhs <= 4 * BigInt(b_sq) * BigInt(c_sq);
}

} // namespace fq
