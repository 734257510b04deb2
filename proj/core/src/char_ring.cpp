#include "fq/char_ring.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace fq {

void WeightMultiset::add(const Weight& w, std::int64_t m) {
    if (m == 0) return;
    auto it = counts.find(w);
    if (it == counts.end()) {
        counts.emplace(w, m);
    } else {
        it->second += m;
        if (it->second == 0) counts.erase(it);
    }
}

std::int64_t WeightMultiset::total() const {
    std::int64_t s = 0;
    for (const auto& [w, m] : counts) s += m;
    return s;
}

void CharacterElement::add(const Weight& w, std::int64_t m) {
    if (m == 0) return;
    auto it = coeffs.find(w);
    if (it == coeffs.end()) {
        coeffs.emplace(w, m);
    } else {
        it->second += m;
        if (it->second == 0) coeffs.erase(it);
    }
}

bool CharacterElement::is_genuine() const {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const auto& kv) { return kv.second >= 0; });
}

namespace {

void require_dominant(const Weight& w, const RootSystem& rs, const char* what) {
    if (!is_dominant(w, rs))
        throw NonDominant(std::string(what) + " requires a dominant weight, got " +
                          w.to_string());
}

// Per-factor enumeration of the dominant weights mu of the block with
// lambda_block - mu_block in the nonnegative span of the block's simple
// roots. Type A: weakly decreasing, same sum, partial sums dominated.
void enumerate_block_dominant(const Factor& f, const std::vector<std::int64_t>& lb,
                              std::vector<std::vector<std::int64_t>>& out) {
    if (f.kind == FactorKind::Torus) {
        out.push_back(lb);
        return;
    }
    if (f.kind == FactorKind::SU && f.n == 2) {
        for (std::int64_t m = lb[0]; m >= 0; m -= 2) out.push_back({m});
        return;
    }
    const int n = f.n;
    std::int64_t total = 0, hi = lb[0], lo = lb[n - 1];
    for (auto v : lb) total += v;
    // Recursive descent over weakly decreasing tuples within [lo, hi],
    // pruned by the partial-sum dominance against lambda.
    std::vector<std::int64_t> cur(n);
    std::vector<std::int64_t> lam_prefix(n + 1, 0);
    for (int i = 0; i < n; ++i) lam_prefix[i + 1] = lam_prefix[i] + lb[i];
    auto rec = [&](auto&& self, int pos, std::int64_t prev, std::int64_t sum) -> void {
        if (pos == n) {
            if (sum == total) out.push_back(cur);
            return;
        }
        std::int64_t remaining = n - pos;
        for (std::int64_t v = std::min(prev, hi); v >= lo; --v) {
            std::int64_t s = sum + v;
            if (s > lam_prefix[pos + 1]) continue;       // dominance violated
            if (s + (remaining - 1) * v < total) break;  // cannot reach the sum
            cur[pos] = v;
            self(self, pos + 1, v, s);
        }
    };
    rec(rec, 0, hi, 0);
}

struct FreudenthalKey {
    std::string sig;
    Weight lambda;
    bool operator<(const FreudenthalKey& o) const {
        return std::tie(sig, lambda) < std::tie(o.sig, o.lambda);
    }
};

std::mutex g_freudenthal_mutex;
std::map<FreudenthalKey, std::shared_ptr<const WeightMultiset>> g_freudenthal_cache;

std::shared_ptr<const WeightMultiset> freudenthal(const Weight& lambda, const RootSystem& rs) {
    // Dominant candidates: per-block products.
    std::vector<std::vector<std::vector<std::int64_t>>> block_choices;
    for (std::size_t b = 0; b < rs.group().factors.size(); ++b) {
        const auto& f = rs.group().factors[b];
        auto [lo, hi] = rs.blocks()[b];
        std::vector<std::int64_t> lb(lambda.coords.begin() + lo, lambda.coords.begin() + hi);
        block_choices.emplace_back();
        enumerate_block_dominant(f, lb, block_choices.back());
    }

    std::vector<Weight> dominants;
    std::vector<std::int64_t> partial;
    auto assemble = [&](auto&& self, std::size_t b) -> void {
        if (b == block_choices.size()) {
            dominants.emplace_back(partial);
            return;
        }
        for (const auto& blk : block_choices[b]) {
            partial.insert(partial.end(), blk.begin(), blk.end());
            self(self, b + 1);
            partial.resize(partial.size() - blk.size());
        }
    };
    assemble(assemble, 0);

    // Depth below lambda: total root-subtraction count, via lattice coords of
    // lambda - mu paired against the per-block inversion (partial sums).
    auto depth = [&](const Weight& mu) {
        std::int64_t d = 0;
        Weight diff = lambda - mu;
        int offset = 0;
        for (const auto& f : rs.group().factors) {
            int dim = f.ambient_dim();
            if (f.kind == FactorKind::SU && f.n == 2) {
                d += diff.coords[offset] / 2;
            } else if (f.kind != FactorKind::Torus) {
                std::int64_t acc = 0;
                for (int i = 0; i + 1 < f.n; ++i) {
                    acc += diff.coords[offset + i];
                    d += acc;
                }
            }
            offset += dim;
        }
        return d;
    };

    std::sort(dominants.begin(), dominants.end(),
              [&](const Weight& a, const Weight& b) {
                  auto da = depth(a), db = depth(b);
                  if (da != db) return da < db;
                  return a < b;
              });

    std::map<Weight, std::int64_t> mult; // dominant weight -> multiplicity
    const Weight& delta = rs.delta();
    std::int64_t lam_sq = (lambda + delta).norm_sq();

    auto mult_at = [&](const Weight& nu) -> std::int64_t {
        Weight key = dominant_in_orbit(nu, rs);
        auto it = mult.find(key);
        return it == mult.end() ? 0 : it->second;
    };

    for (const auto& mu : dominants) {
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        std::int64_t denom = lam_sq - (mu + delta).norm_sq();
        if (denom <= 0) continue; // not a weight of V_lambda
        std::int64_t num = 0;
        for (const auto& alpha : rs.positive_roots()) {
            for (std::int64_t k = 1;; ++k) {
                Weight nu = mu + alpha * k;
                std::int64_t m = mult_at(nu);
                if (m == 0) {
                    // Weights of V_lambda along mu + N*alpha form an unbroken
                    // string, so the first gap ends the sum.
                    break;
                }
                num += m * nu.dot(alpha);
            }
        }
        if ((2 * num) % denom != 0)
            throw InvalidInput("multiplicity recursion produced a non-integer at " +
                               mu.to_string());
        std::int64_t m = 2 * num / denom;
        if (m > 0) mult[mu] = m;
    }

    auto result = std::make_shared<WeightMultiset>();
    for (const auto& [mu, m] : mult)
        for (const auto& w : weyl_orbit(mu, rs)) result->add(w, m);
    return result;
}

} // namespace

std::shared_ptr<const WeightMultiset> weight_multiplicities(const Weight& lambda,
                                                            const RootSystem& rs) {
    Weight lam = rs.canonical(lambda);
    require_dominant(lam, rs, "weight_multiplicities");
    FreudenthalKey key{rs.signature(), lam};
    {
        std::lock_guard<std::mutex> lock(g_freudenthal_mutex);
        auto it = g_freudenthal_cache.find(key);
        if (it != g_freudenthal_cache.end()) return it->second;
    }
    auto ws = freudenthal(lam, rs);
    std::lock_guard<std::mutex> lock(g_freudenthal_mutex);
    auto [it, inserted] = g_freudenthal_cache.emplace(key, std::move(ws));
    return it->second;
}

std::int64_t dim(const Weight& lambda, const RootSystem& rs) {
    Weight lam = rs.canonical(lambda);
    require_dominant(lam, rs, "dim");
    // Product over positive roots of <lambda+delta, a> / <delta, a>.
    BigInt num = 1, den = 1;
    Weight shifted = lam + rs.delta();
    for (const auto& alpha : rs.positive_roots()) {
        // Type A coroots coincide with roots up to the SU(2) convention,
        // where the pairing divides by the root half.
        std::int64_t pair_num = shifted.dot(alpha);
        std::int64_t pair_den = rs.delta().dot(alpha);
        num *= pair_num;
        den *= pair_den;
    }
    BigInt d = num / den;
    return d.convert_to<std::int64_t>();
}

std::int64_t char_dim(const CharacterElement& c, const RootSystem& rs) {
    std::int64_t s = 0;
    for (const auto& [w, m] : c.coeffs) s += m * dim(w, rs);
    return s;
}

CharacterElement tensor(const Weight& lambda_in, const Weight& theta_in, const RootSystem& rs) {
    Weight lambda = rs.canonical(lambda_in);
    Weight theta = rs.canonical(theta_in);
    require_dominant(lambda, rs, "tensor");
    require_dominant(theta, rs, "tensor");
    if (dim(theta, rs) > dim(lambda, rs)) std::swap(lambda, theta);

    CharacterElement out;
    out.group_sig = rs.signature();
    const Weight& delta = rs.delta();
    auto wts = weight_multiplicities(theta, rs);
    for (const auto& [nu, m] : wts->counts) {
        // Raw variant: the delta shift leaves the SU(n>=3) sum-zero lattice,
        // but the reflections are block-local and cancel after subtracting.
        auto rep = dominant_representative_raw(lambda + nu + delta, rs);
        if (!rep) continue;
        out.add(rep->weight - delta, m * rep->parity);
    }
    if (!out.is_genuine())
        throw NotACharacter("tensor produced a negative coefficient (internal)");
    return out;
}

CharacterElement tensor_elements(const CharacterElement& a, const CharacterElement& b,
                                 const RootSystem& rs) {
    if (a.group_sig != b.group_sig || a.group_sig != rs.signature())
        throw GroupMismatch("tensor_elements arguments live over different groups");
    CharacterElement out;
    out.group_sig = rs.signature();
    for (const auto& [la, ma] : a.coeffs)
        for (const auto& [th, mb] : b.coeffs)
            for (const auto& [mu, c] : tensor(la, th, rs).coeffs)
                out.add(mu, ma * mb * c);
    return out;
}

CharacterElement decompose_weights(const WeightMultiset& ws, const RootSystem& rs) {
    WeightMultiset rest;
    for (const auto& [w, m] : ws.counts) {
        if (m < 0) throw NotACharacter("multiset has a negative count at " + w.to_string());
        try {
            rest.add(rs.canonical(w), m);
        } catch (const InvalidInput& e) {
            throw NotACharacter(e.what());
        }
    }
    CharacterElement out;
    out.group_sig = rs.signature();
    const Weight& delta = rs.delta();

    while (!rest.counts.empty()) {
        // Highest surviving weight: maximal height, then lexicographically
        // largest. In a genuine character it is a highest weight.
        auto best = rest.counts.begin();
        std::int64_t best_h = best->first.dot(delta);
        for (auto it = std::next(rest.counts.begin()); it != rest.counts.end(); ++it) {
            std::int64_t h = it->first.dot(delta);
            if (h > best_h || (h == best_h && best->first < it->first)) {
                best = it;
                best_h = h;
            }
        }
        Weight top = best->first;
        std::int64_t mult = best->second;
        if (!is_dominant(top, rs))
            throw NotACharacter("maximal residue weight " + top.to_string() +
                                " is not dominant");
        auto sys = weight_multiplicities(top, rs);
        for (const auto& [w, m] : sys->counts) {
            rest.add(w, -mult * m);
            auto it = rest.counts.find(w);
            if (it != rest.counts.end() && it->second < 0)
                throw NotACharacter("subtracting " + top.to_string() +
                                    " drives multiplicity negative at " + w.to_string());
        }
        out.add(top, mult);
    }
    return out;
}

Weight dual(const Weight& lambda, const RootSystem& rs) {
    Weight lam = rs.canonical(lambda);
    require_dominant(lam, rs, "dual");
    Weight out = lam;
    int offset = 0;
    for (const auto& f : rs.group().factors) {
        int d = f.ambient_dim();
        if (f.kind == FactorKind::Torus) {
            for (int i = 0; i < d; ++i) out.coords[offset + i] = -lam.coords[offset + i];
        } else if (f.kind == FactorKind::SU && f.n == 2) {
            // self-dual
        } else {
            // -w0: negate and reverse the block
            for (int i = 0; i < d; ++i)
                out.coords[offset + i] = -lam.coords[offset + d - 1 - i];
        }
        offset += d;
    }
    return rs.canonical(out);
}

CharacterElement trivial_character(const RootSystem& rs) {
    CharacterElement c;
    c.group_sig = rs.signature();
    c.add(Weight(std::vector<std::int64_t>(rs.ambient_dim(), 0)), 1);
    return c;
}

CharacterElement add_characters(const CharacterElement& a, const CharacterElement& b) {
    if (a.group_sig != b.group_sig)
        throw GroupMismatch("adding characters over different groups");
    CharacterElement out = a;
    for (const auto& [w, m] : b.coeffs) out.add(w, m);
    return out;
}

CharacterElement scale_character(const CharacterElement& a, std::int64_t k) {
    CharacterElement out;
    out.group_sig = a.group_sig;
    for (const auto& [w, m] : a.coeffs) out.add(w, m * k);
    return out;
}

WeightMultiset character_weights(const CharacterElement& c, const RootSystem& rs) {
    if (!c.is_genuine())
        throw NegativeCharacter("weight system of a virtual character is undefined");
    WeightMultiset out;
    for (const auto& [lam, m] : c.coeffs)
        for (const auto& [w, k] : weight_multiplicities(lam, rs)->counts) out.add(w, m * k);
    return out;
}

WeightMultiset convolve(const WeightMultiset& a, const WeightMultiset& b) {
    WeightMultiset out;
    for (const auto& [wa, ma] : a.counts)
        for (const auto& [wb, mb] : b.counts) out.add(wa + wb, ma * mb);
    return out;
}

} // namespace fq
