#include "test_util.hpp"

namespace fqtest {

std::vector<fq::Weight> dominant_weights_up_to(const fq::RootSystem& rs,
                                               std::int64_t nsq_max) {
    const int dim = rs.ambient_dim();
    std::int64_t span = 0;
    while (span * span <= nsq_max) ++span;
    std::vector<fq::Weight> out;
    std::vector<std::int64_t> cur(dim, 0);
    auto rec = [&](auto&& self, int pos, std::int64_t nsq_left) -> void {
        if (pos == dim) {
            fq::Weight w{cur};
            if (!rs.in_lattice_span(w)) return;
            if (!fq::is_dominant(w, rs)) return;
            out.push_back(w);
            return;
        }
        for (std::int64_t v = -span; v <= span; ++v) {
            if (v * v > nsq_left) continue;
            cur[pos] = v;
            self(self, pos + 1, nsq_left - v * v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, nsq_max);
    return out;
}

fq::Weight random_weight(const fq::RootSystem& rs, std::mt19937& gen, int span) {
    std::uniform_int_distribution<int> dist(-span, span);
    for (;;) {
        std::vector<std::int64_t> c(rs.ambient_dim());
        for (auto& v : c) v = dist(gen);
        fq::Weight w{std::move(c)};
        if (rs.in_lattice_span(w)) return w;
        try {
            return rs.canonical(w);
        } catch (const fq::InvalidInput&) {
            continue;
        }
    }
}

} // namespace fqtest
