#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "fq/json_io.hpp"
#include "fq/parallel.hpp"

namespace {

using fq::Json;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fq::InvalidInput("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw fq::InvalidInput("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

fq::Weight parse_weight_arg(const std::string& text) {
    try {
        return fq::weight_from_json(Json::parse(text));
    } catch (const fq::Error&) {
        throw;
    } catch (const std::exception&) {
        throw fq::InvalidInput("weight argument must be a JSON integer array, got '" +
                               text + "'");
    }
}

std::vector<double> parse_real_vector(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception&) {
        throw fq::InvalidInput("expected a JSON number array, got '" + text + "'");
    }
    std::vector<double> v;
    for (const auto& x : j) v.push_back(x.get<double>());
    return v;
}

fq::Rational parse_radius(const std::string& text) {
    fq::Rational r = fq::parse_rational(text);
    if (r <= 0) throw fq::InvalidInput("radius must be positive");
    return r;
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Compact descending-weight map, e.g. {"(2,0)":1,"(1,1)":1}.
template <typename MapT>
std::string compact_map(const MapT& m) {
    std::string out = "{";
    bool first = true;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        if (!first) out += ",";
        first = false;
        out += "\"" + it->first.to_string() + "\":" + std::to_string(it->second);
    }
    return out + "}";
}

struct Options {
    bool json = false;
};

void emit_report(const fq::Report& rep, const Options& opt) {
    if (opt.json) {
        std::cout << fq::report_to_json(rep).dump(2) << "\n";
    } else {
        std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
        for (const auto& d : rep.diffs)
            std::cout << "  mismatch at " << d.weight.to_string() << ": lhs=" << d.lhs
                      << " rhs=" << d.rhs << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"formal quantization toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "machine-readable JSON output");

    std::string group_path, model_path, embedding_path, polytope_path;
    std::string lhs_text, rhs_text, weight_text, theta_text, y_text, xi_text;
    std::string radius_text, h_margin_text;
    std::int64_t n_arg = 1;

    auto* weights_cmd = app.add_subcommand("weights", "weight multiplicities of an irreducible");
    weights_cmd->add_option("--group", group_path)->required();
    weights_cmd->add_option("--weight", weight_text)->required();

    auto* dim_cmd = app.add_subcommand("dim", "dimension of an irreducible");
    dim_cmd->add_option("--group", group_path)->required();
    dim_cmd->add_option("--weight", weight_text)->required();

    auto* tensor_cmd = app.add_subcommand("tensor", "tensor product decomposition");
    tensor_cmd->add_option("--group", group_path)->required();
    tensor_cmd->add_option("--lhs", lhs_text)->required();
    tensor_cmd->add_option("--rhs", rhs_text)->required();

    auto* branch_cmd = app.add_subcommand("branch", "restriction to a subgroup");
    branch_cmd->add_option("--embedding", embedding_path)->required();
    branch_cmd->add_option("--weight", weight_text)->required();

    auto* quantize_cmd = app.add_subcommand("quantize", "multiplicity series of a model");
    quantize_cmd->add_option("--model", model_path)->required();
    quantize_cmd->add_option("--radius", radius_text)->required();

    auto* hermitian_cmd = app.add_subcommand("hermitian", "hermitian model commands");
    auto* hq_cmd = hermitian_cmd->add_subcommand("quantize", "multiplicity series");
    hq_cmd->add_option("--model", model_path)->required();
    hq_cmd->add_option("--radius", radius_text)->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "reduced space multiplicity");
    reduce_cmd->add_option("--model", model_path)->required();
    reduce_cmd->add_option("--weight", weight_text)->required();

    auto* proper_cmd = app.add_subcommand("properness", "torus-hull properness test");
    proper_cmd->add_option("--model", model_path)->required();

    auto* verify_cmd = app.add_subcommand("verify", "identity verification");
    verify_cmd->require_subcommand(1);
    auto* vrest = verify_cmd->add_subcommand("restriction", "restriction identity");
    vrest->add_option("--model", model_path)->required();
    vrest->add_option("--embedding", embedding_path)->required();
    vrest->add_option("--radius", radius_text)->required();
    vrest->add_option("--h-margin-sq", h_margin_text,
                      "certified squared margin for the restricted action");
    auto* vprod = verify_cmd->add_subcommand("product", "product identity");
    vprod->add_option("--model", model_path)->required();
    vprod->add_option("--theta", theta_text)->required();
    vprod->add_option("--radius", radius_text)->required();
    auto* vconv = verify_cmd->add_subcommand("convergence", "truncation convergence");
    vconv->add_option("--model", model_path)->required();
    vconv->add_option("--polytope", polytope_path)->required();
    vconv->add_option("--radius", radius_text)->required();
    vconv->add_option("--n", n_arg, "largest dilation factor")->required();

    auto* poly_cmd = app.add_subcommand("polytope", "polytope operations");
    poly_cmd->require_subcommand(1);
    auto* pcheck = poly_cmd->add_subcommand("check", "adapted-polytope checks");
    pcheck->add_option("--polytope", polytope_path)->required();
    auto* ppsi = poly_cmd->add_subcommand("psi", "exponential-average map");
    ppsi->add_option("--polytope", polytope_path)->required();
    ppsi->add_option("--Y", y_text)->required();
    auto* pinv = poly_cmd->add_subcommand("inverse", "invert the exponential-average map");
    pinv->add_option("--polytope", polytope_path)->required();
    pinv->add_option("--xi", xi_text)->required();
    auto* pball = poly_cmd->add_subcommand("ball", "largest central ball radius");
    pball->add_option("--polytope", polytope_path)->required();

    CLI11_PARSE(app, argc, argv);

    auto load_model = [&]() { return fq::model_from_json(load_json(model_path)); };
    auto load_group = [&]() {
        return std::make_shared<fq::RootSystem>(fq::group_from_json(load_json(group_path)));
    };

    if (weights_cmd->parsed()) {
        auto rs = load_group();
        auto ws = fq::weight_multiplicities(rs->canonical(parse_weight_arg(weight_text)), *rs);
        if (opt.json)
            std::cout << fq::multiset_to_json(*ws).dump() << "\n";
        else
            std::cout << compact_map(ws->counts) << "\n";
        return 0;
    }
    if (dim_cmd->parsed()) {
        auto rs = load_group();
        std::cout << fq::dim(parse_weight_arg(weight_text), *rs) << "\n";
        return 0;
    }
    if (tensor_cmd->parsed()) {
        auto rs = load_group();
        auto prod = fq::tensor(parse_weight_arg(lhs_text), parse_weight_arg(rhs_text), *rs);
        if (opt.json)
            std::cout << fq::character_to_json(prod, *rs).dump() << "\n";
        else
            std::cout << compact_map(prod.coeffs) << "\n";
        return 0;
    }
    if (branch_cmd->parsed()) {
        auto [emb, margin] = fq::embedding_from_json(load_json(embedding_path));
        (void)margin;
        fq::CharacterElement out;
        try {
            out = fq::branch(parse_weight_arg(weight_text), emb);
        } catch (const fq::NotACharacter& e) {
            throw fq::NotACharacter(std::string("embedding rejected: ") + e.what());
        }
        if (opt.json)
            std::cout << fq::character_to_json(out, *emb.subgroup).dump() << "\n";
        else
            std::cout << compact_map(out.coeffs) << "\n";
        return 0;
    }
    if (quantize_cmd->parsed() || hq_cmd->parsed()) {
        auto m = load_model();
        auto s = fq::hermitian_quantization(
            m, fq::RadiusSq::from_value(parse_radius(radius_text)));
        if (opt.json)
            std::cout << fq::series_to_json(s, *m.group).dump() << "\n";
        else
            std::cout << compact_map(s.coeffs) << "  (trusted radius "
                      << format_real(s.trusted.value()) << ")\n";
        return 0;
    }
    if (reduce_cmd->parsed()) {
        auto m = load_model();
        std::cout << fq::reduced_space_multiplicity(m, parse_weight_arg(weight_text))
                  << "\n";
        return 0;
    }
    if (proper_cmd->parsed()) {
        auto m = load_model();
        auto pr = fq::properness_check(m);
        if (opt.json) {
            Json j{{"proper", pr.proper},
                   {"margin_sq", fq::rational_to_string(pr.margin_sq)}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (pr.proper ? "proper" : "not proper")
                      << " margin_sq=" << fq::rational_to_string(pr.margin_sq) << "\n";
        }
        return 0;
    }
    if (vrest->parsed()) {
        auto m = load_model();
        auto [emb, margin] = fq::embedding_from_json(load_json(embedding_path));
        if (!h_margin_text.empty()) margin = fq::parse_rational(h_margin_text);
        auto rep = fq::verify_restriction_identity(m, emb, parse_radius(radius_text), margin);
        emit_report(rep, opt);
        return rep.pass ? 0 : 1;
    }
    if (vprod->parsed()) {
        auto m = load_model();
        auto rep = fq::verify_product_identity(m, parse_weight_arg(theta_text),
                                               parse_radius(radius_text));
        emit_report(rep, opt);
        return rep.pass ? 0 : 1;
    }
    if (vconv->parsed()) {
        auto m = load_model();
        auto P = fq::polytope_from_json(load_json(polytope_path));
        auto rep = fq::verify_convergence(m, P, parse_radius(radius_text), n_arg);
        emit_report(rep, opt);
        return rep.pass ? 0 : 1;
    }
    if (pcheck->parsed()) {
        auto P = fq::polytope_from_json(load_json(polytope_path));
        auto rep = fq::check_adapted(P);
        if (opt.json) {
            Json j{{"vertices_regular_lattice", rep.vertices_regular_lattice},
                   {"w_invariant", rep.w_invariant},
                   {"delzant", rep.delzant},
                   {"adapted", rep.all()}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "regular=" << rep.vertices_regular_lattice
                      << " w_invariant=" << rep.w_invariant << " delzant=" << rep.delzant
                      << " adapted=" << rep.all() << "\n";
        }
        return 0;
    }
    if (ppsi->parsed()) {
        auto P = fq::polytope_from_json(load_json(polytope_path));
        auto v = fq::psi_T(P, parse_real_vector(y_text));
        Json arr = Json::array();
        for (double x : v) arr.push_back(x);
        std::cout << arr.dump() << "\n";
        return 0;
    }
    if (pinv->parsed()) {
        auto P = fq::polytope_from_json(load_json(polytope_path));
        auto v = fq::legendre_inverse(P, parse_real_vector(xi_text));
        Json arr = Json::array();
        for (double x : v) arr.push_back(x);
        std::cout << arr.dump() << "\n";
        return 0;
    }
    if (pball->parsed()) {
        auto P = fq::polytope_from_json(load_json(polytope_path));
        if (opt.json) {
            Json j{{"radius", fq::biggest_ball_radius(P)},
                   {"radius_sq", fq::rational_to_string(fq::biggest_ball_radius_sq(P))}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << format_real(fq::biggest_ball_radius(P))
                      << " (squared " << fq::rational_to_string(fq::biggest_ball_radius_sq(P))
                      << ")\n";
        }
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fq::Error& e) {
        Json err{{"error", e.code()}, {"detail", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json err{{"error", "internal"}, {"detail", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
}
