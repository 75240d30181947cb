// zc: exact calculator for the container rings W(Z), W0(Z), H(Z), the motive
// ring Z[L], brute-force variety counting, and discrete dynamical systems.
//
// All arithmetic is exact; rationals print as "num/den" strings.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zc/dynamics.hpp"
#include "zc/io.hpp"
#include "zc/motive.hpp"

namespace {

using nlohmann::json;
using namespace zc;

struct config {
    std::size_t order = 16;
    std::string format = "text";
    std::int64_t budget = default_budget;

    bool json_out() const { return format == "json"; }
};

void emit(const config& cfg, const json& j, const std::string& text) {
    if (cfg.json_out())
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

std::string join_rats(const std::vector<Rat>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_str(v[i]);
    }
    return out;
}

std::string join_ints(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out;
}

// ascending-degree pretty printer: "1 - 3*t + t^2"
template <class T>
std::string fmt_poly(const polynomial<T>& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        T a = p.coeff(static_cast<std::size_t>(i));
        if (a == 0) continue;
        bool neg = a < 0;
        if (!out.empty())
            out += neg ? " - " : " + ";
        else if (neg)
            out += "-";
        T mag = neg ? T(-a) : a;
        std::string cs;
        if constexpr (std::is_same_v<T, Rat>)
            cs = rat_str(mag);
        else
            cs = mag.str();
        if (i == 0) {
            out += cs;
        } else {
            if (mag != 1) out += cs + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

json parse_json(const std::string& s) {
    json j = json::parse(s, nullptr, false);
    if (j.is_discarded()) throw error("malformed JSON: " + s);
    return j;
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

// A series argument is either literal coefficients or, with --inverse-input,
// the denominator polynomial of 1/den expanded to the truncation order.
witt_elem parse_witt_arg(const std::string& s, bool inverse, std::size_t order) {
    json j = parse_json(s);
    if (inverse) {
        rat_poly den(io::parse_rat_array(j));
        return witt_elem(series_from_fraction(rat_poly::one(), den, order));
    }
    trunc_series t = io::parse_series(j);
    if (t.order() > order) t = t.truncate(order);
    return witt_elem(std::move(t));
}

int_poly parse_poly_arg(const std::string& s) { return io::parse_int_poly(parse_json(s)); }

void emit_series(const config& cfg, const trunc_series& s) {
    emit(cfg, io::series_to_json(s), join_rats(s.c));
}

json w0_to_json(const w0_elem& e) {
    return json{{"num", io::int_poly_to_json(e.num())}, {"den", io::int_poly_to_json(e.den())}};
}

void emit_w0(const config& cfg, const w0_elem& e) {
    emit(cfg, w0_to_json(e),
         "num: " + fmt_poly(e.num()) + "\nden: " + fmt_poly(e.den()));
}

std::string lrs_text(const lin_rec_seq& a) {
    return "init: " + join_ints(a.init()) + "\ncharpoly: " + fmt_poly(a.charpoly(), "x");
}

void emit_lrs(const config& cfg, const lin_rec_seq& a) {
    emit(cfg, io::lrs_to_json(a), lrs_text(a));
}

w0_elem parse_w0_arg(const std::string& num, const std::string& den) {
    return w0_elem::from_fraction(parse_poly_arg(num), parse_poly_arg(den));
}

lin_rec_seq parse_lrs_arg(const std::string& s) { return io::parse_lrs(parse_json(s)); }

torified_variety parse_tori(const std::vector<unsigned>& dims) {
    if (dims.empty()) throw error("--tori needs at least one torus dimension");
    return torified_variety{dims};
}

json variety_to_json(const affine_variety& x) {
    json vars = json::array();
    for (unsigned i = 0; i < x.num_vars; ++i) vars.push_back("x" + std::to_string(i));
    json polys = json::array();
    for (const auto& p : x.polys) {
        json terms = json::array();
        for (const auto& [exps, coeff] : p.terms) terms.push_back(json::array({exps, coeff}));
        polys.push_back(terms);
    }
    return json{{"p", x.p}, {"vars", vars}, {"polys", polys}};
}

fin_dyn_system parse_map_arg(const std::string& s) {
    json j = parse_json(s);
    if (!j.is_array()) throw error("--map expects a JSON array of indices");
    std::vector<std::size_t> m;
    for (const auto& v : j) {
        long long k = v.get<long long>();
        if (k < 0) throw error("map values must be non-negative");
        m.push_back(static_cast<std::size_t>(k));
    }
    return fin_dyn_system(std::move(m));
}

// Rationality detection shared by `w0 detect`, `variety zeta --detect`, and
// `dynsys zeta --detect`.
void emit_detection(const config& cfg, const witt_elem& z, std::size_t deg) {
    auto w0 = w0_from_witt(z, deg);
    if (cfg.json_out()) {
        json j{{"rational", w0.has_value()}};
        if (w0) {
            j["num"] = io::int_poly_to_json(w0->num());
            j["den"] = io::int_poly_to_json(w0->den());
        }
        std::cout << j.dump() << "\n";
    } else if (w0) {
        std::cout << "(" << fmt_poly(w0->num()) << ")/(" << fmt_poly(w0->den()) << ")\n";
    } else {
        std::cout << "not rational at degree <= " << deg << "\n";
    }
}

std::size_t default_deg(std::size_t order) { return order >= 4 ? (order - 2) / 2 : 1; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact container-ring and zeta-function calculator"};
    app.require_subcommand(1);

    config cfg;
    if (const char* env = std::getenv("ZC_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) {
            std::cerr << "zc: invalid ZC_BUDGET value: " << env << "\n";
            return 2;
        }
        cfg.budget = v;
    }
    bool inverse_input = false;
    app.add_option("--order", cfg.order, "truncation order")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--budget", cfg.budget, "point-enumeration budget")
        ->check(CLI::PositiveNumber);
    app.add_flag("--inverse-input", inverse_input,
                 "series arguments are denominator polynomials of 1/den");

    std::string a_str, b_str, g_str;
    std::string num_str = "[1]", den_str = "[1]";
    std::string bnum_str = "[1]", bden_str = "[1]";
    std::string matrix_str, file_str, file2_str, series_str, init_str, cp_str;
    std::string poly_str_arg, m_str = "1", c_str = "1", map_str;
    std::vector<unsigned> tori;
    std::size_t n_arg = 1, m_arg = 1, count_arg = 12, window_arg = 12;
    std::size_t deg_arg = 0;
    bool detect = false;

    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* c = parent->add_subcommand(name, desc);
        c->fallthrough();
        return c;
    };

    // ---- witt ----------------------------------------------------------
    CLI::App* witt = app.add_subcommand("witt", "big Witt ring W(Z)");
    witt->require_subcommand(1);
    witt->fallthrough();
    {
        CLI::App* c = leaf(witt, "add", "Witt sum (series product)");
        c->add_option("--a", a_str)->required();
        c->add_option("--b", b_str)->required();
        c->callback([&] {
            emit_series(cfg, witt_add(parse_witt_arg(a_str, inverse_input, cfg.order),
                                      parse_witt_arg(b_str, inverse_input, cfg.order))
                                 .series());
        });
    }
    {
        CLI::App* c = leaf(witt, "mul", "Witt product via ghost coordinates");
        c->add_option("--a", a_str)->required();
        c->add_option("--b", b_str)->required();
        c->callback([&] {
            emit_series(cfg, witt_mul(parse_witt_arg(a_str, inverse_input, cfg.order),
                                      parse_witt_arg(b_str, inverse_input, cfg.order))
                                 .series());
        });
    }
    {
        CLI::App* c = leaf(witt, "neg", "Witt additive inverse");
        c->add_option("--a", a_str)->required();
        c->callback([&] {
            emit_series(cfg, witt_neg(parse_witt_arg(a_str, inverse_input, cfg.order)).series());
        });
    }
    {
        CLI::App* c = leaf(witt, "ghost", "ghost components g_1..g_order");
        c->add_option("--a", a_str)->required();
        c->callback([&] {
            ghost_vector g = ghost(parse_witt_arg(a_str, inverse_input, cfg.order));
            emit(cfg, io::ghost_to_json(g), join_rats(g.g));
        });
    }
    {
        CLI::App* c = leaf(witt, "ghost-inv", "series with the given ghost components");
        c->add_option("--g", g_str)->required();
        c->callback([&] {
            ghost_vector g{io::parse_rat_array(parse_json(g_str))};
            emit_series(cfg, ghost_inverse(g).series());
        });
    }
    {
        CLI::App* c = leaf(witt, "adams", "Adams operation Psi_n");
        c->add_option("--a", a_str)->required();
        c->add_option("--n", n_arg)->required()->check(CLI::PositiveNumber);
        c->callback([&] {
            emit_series(
                cfg, adams(parse_witt_arg(a_str, inverse_input, cfg.order), n_arg).series());
        });
    }

    // ---- w0 ------------------------------------------------------------
    CLI::App* w0 = app.add_subcommand("w0", "rational-function ring W0(Z)");
    w0->require_subcommand(1);
    w0->fallthrough();
    {
        CLI::App* c = leaf(w0, "from-matrix", "class of an integer matrix");
        c->add_option("--matrix", matrix_str)->required();
        c->callback([&] {
            emit_w0(cfg, w0_elem::from_matrix(io::parse_matrix(parse_json(matrix_str))));
        });
    }
    {
        CLI::App* c = leaf(w0, "add", "sum of two classes");
        c->add_option("--a-num", num_str);
        c->add_option("--a-den", den_str);
        c->add_option("--b-num", bnum_str);
        c->add_option("--b-den", bden_str);
        c->callback([&] {
            emit_w0(cfg, w0_add(parse_w0_arg(num_str, den_str),
                                parse_w0_arg(bnum_str, bden_str)));
        });
    }
    {
        CLI::App* c = leaf(w0, "mul", "product of two classes");
        c->add_option("--a-num", num_str);
        c->add_option("--a-den", den_str);
        c->add_option("--b-num", bnum_str);
        c->add_option("--b-den", bden_str);
        c->callback([&] {
            emit_w0(cfg, w0_mul(parse_w0_arg(num_str, den_str),
                                parse_w0_arg(bnum_str, bden_str)));
        });
    }
    {
        CLI::App* c = leaf(w0, "l", "series expansion L(num/den)");
        c->add_option("--num", num_str);
        c->add_option("--den", den_str);
        c->callback(
            [&] { emit_series(cfg, l_map(parse_w0_arg(num_str, den_str), cfg.order).series()); });
    }
    {
        CLI::App* c = leaf(w0, "tr", "trace-of-powers sequence Tr(num/den)");
        c->add_option("--num", num_str);
        c->add_option("--den", den_str);
        c->add_option("--count", count_arg)->check(CLI::PositiveNumber);
        c->callback([&] {
            lin_rec_seq t = tr_map(parse_w0_arg(num_str, den_str), count_arg);
            json j = io::lrs_to_json(t);
            j["terms"] = io::int_array_to_json(t.terms(count_arg));
            emit(cfg, j, lrs_text(t) + "\nterms: " + join_ints(t.terms(count_arg)));
        });
    }
    {
        CLI::App* c = leaf(w0, "detect", "rational-function detection from a series");
        c->add_option("--series", series_str)->required();
        c->add_option("--deg", deg_arg, "max num/den degree")->check(CLI::PositiveNumber);
        c->callback([&] {
            witt_elem z = parse_witt_arg(series_str, inverse_input, cfg.order);
            emit_detection(cfg, z, deg_arg ? deg_arg : default_deg(z.order()));
        });
    }

    // ---- hadamard ------------------------------------------------------
    CLI::App* had = app.add_subcommand("hadamard", "linear recursive sequences H(Z)");
    had->require_subcommand(1);
    had->fallthrough();
    {
        CLI::App* c = leaf(had, "new", "minimal form of a recurrence presentation");
        c->add_option("--init", init_str)->required();
        c->add_option("--charpoly", cp_str)->required();
        c->callback([&] {
            std::vector<Int> init;
            for (const auto& v : parse_json(init_str)) init.push_back(io::parse_int(v));
            emit_lrs(cfg, lin_rec_seq(std::move(init), parse_poly_arg(cp_str)));
        });
    }
    {
        CLI::App* c = leaf(had, "terms", "unroll a sequence");
        c->add_option("--a", a_str)->required();
        c->add_option("--count", count_arg)->check(CLI::PositiveNumber);
        c->callback([&] {
            std::vector<Int> t = parse_lrs_arg(a_str).terms(count_arg);
            emit(cfg, io::int_array_to_json(t), join_ints(t));
        });
    }
    {
        CLI::App* c = leaf(had, "add", "termwise sum");
        c->add_option("--a", a_str)->required();
        c->add_option("--b", b_str)->required();
        c->callback([&] { emit_lrs(cfg, lrs_add(parse_lrs_arg(a_str), parse_lrs_arg(b_str))); });
    }
    {
        CLI::App* c = leaf(had, "mul", "termwise (Hadamard) product");
        c->add_option("--a", a_str)->required();
        c->add_option("--b", b_str)->required();
        c->callback(
            [&] { emit_lrs(cfg, lrs_hadamard_mul(parse_lrs_arg(a_str), parse_lrs_arg(b_str))); });
    }
    {
        CLI::App* c = leaf(had, "delta", "comultiplication on a term window");
        c->add_option("--a", a_str)->required();
        c->add_option("--window", window_arg)->check(CLI::PositiveNumber);
        c->callback([&] {
            tensor_decomposition t = lrs_delta(parse_lrs_arg(a_str), window_arg);
            json pairs = json::array();
            std::string text = "rank: " + std::to_string(t.pairs.size());
            for (const auto& [l, r] : t.pairs) {
                pairs.push_back(json{{"left", io::lrs_to_json(l)}, {"right", io::lrs_to_json(r)}});
                text += "\nleft:\n" + lrs_text(l) + "\nright:\n" + lrs_text(r);
            }
            emit(cfg, json{{"rank", t.pairs.size()}, {"pairs", pairs}}, text);
        });
    }
    {
        CLI::App* c = leaf(had, "classify", "counit, primitivity, group-likeness");
        c->add_option("--a", a_str)->required();
        c->add_option("--window", window_arg)->check(CLI::PositiveNumber);
        c->callback([&] {
            lin_rec_seq a = parse_lrs_arg(a_str);
            Int eps = lrs_counit(a);
            bool prim = lrs_is_primitive(a, window_arg);
            bool grp = lrs_is_grouplike(a, window_arg);
            std::string kind = prim ? "primitive" : grp ? "group-like" : "neither";
            emit(cfg,
                 json{{"counit", eps.str()}, {"primitive", prim}, {"group-like", grp}},
                 "counit: " + eps.str() + "\nclass: " + kind);
        });
    }

    // ---- motive --------------------------------------------------------
    CLI::App* mot = app.add_subcommand("motive", "motive ring Z[L]");
    mot->require_subcommand(1);
    mot->fallthrough();
    {
        CLI::App* c = leaf(mot, "from-tori", "motive of a torified variety");
        c->add_option("--tori", tori, "torus dimensions")->required();
        c->callback([&] {
            motive_poly p = motive_of_torified(parse_tori(tori));
            emit(cfg, io::int_poly_to_json(p), fmt_poly(p, "L"));
        });
    }
    {
        CLI::App* c = leaf(mot, "count", "point count over F_{1^n}");
        c->add_option("--tori", tori, "torus dimensions")->required();
        c->add_option("--n", n_arg)->required()->check(CLI::PositiveNumber);
        c->callback([&] {
            Int k = f1_point_count(parse_tori(tori), n_arg);
            emit(cfg, json(k.str()), k.str());
        });
    }
    {
        CLI::App* c = leaf(mot, "f1-zeta", "F1 zeta function of a torified variety");
        c->add_option("--tori", tori, "torus dimensions")->required();
        c->callback([&] { emit_series(cfg, f1_zeta(parse_tori(tori), cfg.order).series()); });
    }
    {
        CLI::App* c = leaf(mot, "kapranov", "Kapranov zeta for the measure L |-> m");
        c->add_option("--poly", poly_str_arg)->required();
        c->add_option("--m", m_str, "value of the counting measure at L");
        c->callback([&] {
            emit_series(cfg, kapranov_zeta(parse_poly_arg(poly_str_arg),
                                           counting_measure{Int(m_str)}, cfg.order)
                                 .series());
        });
    }
    {
        CLI::App* c = leaf(mot, "adams", "Adams operation on a motive");
        c->add_option("--poly", poly_str_arg)->required();
        c->add_option("--n", n_arg)->required()->check(CLI::PositiveNumber);
        c->callback([&] {
            motive_poly p = motive_adams(parse_poly_arg(poly_str_arg), n_arg);
            emit(cfg, io::int_poly_to_json(p), fmt_poly(p, "L"));
        });
    }
    {
        CLI::App* c = leaf(mot, "delta", "comultiplication L |-> L1 + L2 - 2");
        c->add_option("--poly", poly_str_arg)->required();
        c->callback([&] {
            bivar_poly d = motive_delta(parse_poly_arg(poly_str_arg));
            json rows = json::array();
            std::string text;
            for (std::size_t i = 0; i < d.c.size(); ++i) {
                rows.push_back(io::int_array_to_json(d.c[i]));
                if (i) text += "\n";
                text += join_ints(d.c[i]);
            }
            emit(cfg, json{{"coeffs", rows}}, text.empty() ? "0" : text);
        });
    }
    {
        CLI::App* c = leaf(mot, "c-map", "recursive-measure morphism into H(Z)");
        c->add_option("--poly", poly_str_arg)->required();
        c->add_option("--c", c_str, "parameter of the measure family");
        c->add_option("--count", count_arg)->check(CLI::PositiveNumber);
        c->callback([&] {
            lin_rec_seq s = c_morphism(parse_poly_arg(poly_str_arg), Int(c_str), count_arg);
            json j = io::lrs_to_json(s);
            j["terms"] = io::int_array_to_json(s.terms(count_arg));
            emit(cfg, j, lrs_text(s) + "\nterms: " + join_ints(s.terms(count_arg)));
        });
    }

    // ---- variety -------------------------------------------------------
    CLI::App* var = app.add_subcommand("variety", "affine varieties over F_p");
    var->require_subcommand(1);
    var->fallthrough();
    {
        CLI::App* c = leaf(var, "count", "#X(F_{p^n}) by enumeration");
        c->add_option("--file", file_str)->required();
        c->add_option("--n", n_arg)->required()->check(CLI::PositiveNumber);
        c->callback([&] {
            Int k = count_points(io::parse_variety(load_file(file_str)),
                                 static_cast<std::int64_t>(n_arg), cfg.budget);
            emit(cfg, json(k.str()), k.str());
        });
    }
    {
        CLI::App* c = leaf(var, "frobenius", "fixed points of Frob^n on X(F_{p^m})");
        c->add_option("--file", file_str)->required();
        c->add_option("--n", n_arg)->required()->check(CLI::PositiveNumber);
        c->add_option("--m", m_arg)->required()->check(CLI::PositiveNumber);
        c->callback([&] {
            Int k = frobenius_fixed_count(io::parse_variety(load_file(file_str)),
                                          static_cast<std::int64_t>(n_arg),
                                          static_cast<std::int64_t>(m_arg), cfg.budget);
            emit(cfg, json(k.str()), k.str());
        });
    }
    {
        CLI::App* c = leaf(var, "zeta", "Weil zeta from brute-force counts");
        c->add_option("--file", file_str)->required();
        c->add_flag("--detect", detect, "detect a rational function");
        c->add_option("--deg", deg_arg, "max num/den degree for detection")
            ->check(CLI::PositiveNumber);
        c->callback([&] {
            witt_elem z = weil_zeta(io::parse_variety(load_file(file_str)), cfg.order,
                                    cfg.budget);
            if (detect)
                emit_detection(cfg, z, deg_arg ? deg_arg : default_deg(cfg.order));
            else
                emit_series(cfg, z.series());
        });
    }
    {
        CLI::App* c = leaf(var, "product", "product variety (counts multiply)");
        c->add_option("--file", file_str)->required();
        c->add_option("--file2", file2_str)->required();
        c->callback([&] {
            affine_variety xy = product_variety(io::parse_variety(load_file(file_str)),
                                                io::parse_variety(load_file(file2_str)));
            std::cout << variety_to_json(xy).dump() << "\n";
        });
    }

    // ---- dynsys --------------------------------------------------------
    CLI::App* dyn = app.add_subcommand("dynsys", "finite discrete dynamical systems");
    dyn->require_subcommand(1);
    dyn->fallthrough();
    {
        CLI::App* c = leaf(dyn, "fix", "#Fix(f^n)");
        c->add_option("--map", map_str)->required();
        c->add_option("--n", n_arg)->required()->check(CLI::PositiveNumber);
        c->callback([&] {
            Int k = fix_count(parse_map_arg(map_str), n_arg);
            emit(cfg, json(k.str()), k.str());
        });
    }
    {
        CLI::App* c = leaf(dyn, "zeta", "Artin-Mazur zeta");
        c->add_option("--map", map_str)->required();
        c->add_flag("--detect", detect, "detect a rational function");
        c->add_option("--deg", deg_arg, "max num/den degree for detection")
            ->check(CLI::PositiveNumber);
        c->callback([&] {
            witt_elem z = am_zeta(parse_map_arg(map_str), cfg.order);
            if (detect)
                emit_detection(cfg, z, deg_arg ? deg_arg : default_deg(cfg.order));
            else
                emit_series(cfg, z.series());
        });
    }
    {
        CLI::App* c = leaf(dyn, "quasi-unipotent", "eigenvalues all zero or roots of unity?");
        c->add_option("--file", file_str, "homology action {\"matrices\": [...]}");
        c->add_option("--matrix", matrix_str, "a single matrix");
        c->callback([&] {
            homology_action h;
            if (!file_str.empty()) h = io::parse_homology(load_file(file_str));
            if (!matrix_str.empty()) h.matrices.push_back(io::parse_matrix(parse_json(matrix_str)));
            if (h.matrices.empty()) throw error("provide --file or --matrix");
            json j = json::array();
            std::string text;
            for (std::size_t i = 0; i < h.matrices.size(); ++i) {
                bool q = is_quasi_unipotent(h.matrices[i]);
                j.push_back(q);
                if (i) text += "\n";
                text += q ? "true" : "false";
            }
            emit(cfg, j, text);
        });
    }
    {
        CLI::App* c = leaf(dyn, "morse-smale", "lambda-subring and trace-sequence generators");
        c->add_option("--file", file_str)->required();
        c->callback([&] {
            homology_action h = io::parse_homology(load_file(file_str));
            std::vector<witt_elem> wg = morse_smale_witt(h, cfg.order);
            std::vector<lin_rec_seq> hg = morse_smale_hadamard(h, cfg.order);
            json jw = json::array(), jh = json::array();
            std::string text;
            for (const auto& g : wg) jw.push_back(io::series_to_json(g.series()));
            for (const auto& g : hg) jh.push_back(io::lrs_to_json(g));
            for (std::size_t i = 0; i < wg.size(); ++i)
                text += "witt: " + join_rats(wg[i].series().c) + "\n";
            for (std::size_t i = 0; i < hg.size(); ++i)
                text += "trace: " + join_ints(hg[i].terms(cfg.order)) + "\n";
            if (!text.empty()) text.pop_back();
            emit(cfg, json{{"witt", jw}, {"hadamard", jh}}, text);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const budget_exceeded& e) {
        std::cerr << "zc: " << e.what() << "\n";
        return 3;
    } catch (const insufficient_order& e) {
        std::cerr << "zc: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "zc: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
