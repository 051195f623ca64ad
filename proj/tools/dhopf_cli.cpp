#include "dhopf/acceptance.hpp"
#include "dhopf/additive.hpp"
#include "dhopf/arith_series.hpp"
#include "dhopf/dirichlet.hpp"
#include "dhopf/normal_order.hpp"
#include "dhopf/spectral.hpp"
#include "dhopf/symfun.hpp"
#include "dhopf/witt.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace dhopf;
using json = nlohmann::ordered_json;

namespace {

const CLI::Validator natural_number(
    [](std::string &s) -> std::string {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            return "expected a nonnegative integer, got '" + s + "'";
        return {};
    },
    "NAT");

const CLI::Validator partition_list(
    [](std::string &s) -> std::string {
        if (s.find_first_not_of("0123456789,") != std::string::npos)
            return "expected comma-separated parts, got '" + s + "'";
        return {};
    },
    "PARTS");

std::string join(const std::vector<std::string> &xs, const char *sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

template <class Seq>
std::vector<std::string> to_strings(const Seq &xs) {
    std::vector<std::string> out;
    for (const auto &x : xs) out.push_back(x.get_str());
    return out;
}

std::vector<Rational> parse_rationals(const std::string &s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        Rational q;
        if (tok.empty() || q.set_str(tok, 10) != 0 || q.get_den() == 0)
            throw domain_error("not a rational number: '" + tok + "'");
        q.canonicalize();
        out.push_back(q);
    }
    if (out.empty()) throw domain_error("empty vector");
    return out;
}

json tensor_json(const TensorSum &t) {
    json terms = json::array();
    for (const auto &[k, c] : t) {
        json legs = json::array();
        for (const auto &n : k) legs.push_back(n.str());
        terms.push_back({{"legs", legs}, {"coeff", c.get_str()}});
    }
    return terms;
}

json symsum_json(const SymSum &s) {
    json terms = json::array();
    for (const auto &[p, c] : s) terms.push_back({{"pi", p.parts()}, {"coeff", c.get_str()}});
    return terms;
}

void print_matrix(std::ostream &os, const IntMatrix &m, bool csv) {
    if (csv) {
        write_csv(os, m);
        return;
    }
    for (const auto &row : m) {
        std::vector<std::string> cells;
        for (const auto &x : row) cells.push_back(x.get_str());
        os << join(cells) << '\n';
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact computations with the additive and divisor coproducts on the naturals"};
    app.require_subcommand(1);
    bool as_json = false, as_csv = false;

    // coproduct
    std::string cop_kind, cop_n;
    auto *cop = app.add_subcommand("coproduct", "Coproduct of N as a tensor sum");
    cop->add_option("kind", cop_kind, "add | mul | add-unrenorm | mul-unrenorm")
        ->required()
        ->check(CLI::IsMember({"add", "mul", "add-unrenorm", "mul-unrenorm"}));
    cop->add_option("N", cop_n)->required()->check(natural_number);
    cop->add_flag("--json", as_json);

    // antipode
    std::string ant_kind, ant_n;
    auto *ant = app.add_subcommand("antipode", "Antipode value at N");
    ant->add_option("kind", ant_kind, "add | mul | unrenorm")->required()->check(CLI::IsMember({"add", "mul", "unrenorm"}));
    ant->add_option("N", ant_n)->required()->check(natural_number);

    // convolve
    std::string conv_f, conv_g;
    std::uint64_t conv_upto = 0;
    bool conv_additive = false;
    auto *conv = app.add_subcommand("convolve", "Convolution of two named arithmetic functions");
    conv->add_option("--f", conv_f)->required();
    conv->add_option("--g", conv_g)->required();
    conv->add_option("--upto", conv_upto)->required();
    conv->add_flag("--additive", conv_additive, "additive convolution over 0..N instead of divisors");
    conv->add_flag("--csv", as_csv);

    // series
    std::string ser_name;
    std::size_t ser_upto = 0;
    auto *ser = app.add_subcommand("series", "Coefficients of a named Dirichlet series");
    ser->add_option("name", ser_name)->required()->check(CLI::IsMember(series_names()));
    ser->add_option("--upto", ser_upto)->required();
    ser->add_flag("--csv", as_csv);
    ser->add_flag("--json", as_json);

    // cocycle
    std::string coc_phi;
    std::uint64_t coc_upto = 0;
    auto *coc = app.add_subcommand("cocycle", "Multiplicativity and the 2-coboundary of a named function");
    coc->add_option("--phi", coc_phi)->required();
    coc->add_option("--upto", coc_upto)->required();

    // branch
    std::string br_kind, br_b, br_n;
    auto *br = app.add_subcommand("branch", "Branching operators");
    br->add_option("kind", br_kind, "sub | div | derive")->required()->check(CLI::IsMember({"sub", "div", "derive"}));
    br->add_option("B", br_b)->required()->check(natural_number);
    br->add_option("N", br_n)->required()->check(natural_number);

    // symfun
    auto *sym = app.add_subcommand("symfun", "Monomial and Schur products");
    sym->require_subcommand(1);
    std::string sym_a, sym_b;
    auto *circ = sym->add_subcommand("circle", "m_LAMBDA o m_MU in the monomial basis");
    auto *lr = sym->add_subcommand("lr", "s_LAMBDA s_MU in the Schur basis");
    for (auto *s : {circ, lr}) {
        s->add_option("LAMBDA", sym_a)->required()->check(partition_list);
        s->add_option("MU", sym_b)->required()->check(partition_list);
        s->add_flag("--json", as_json);
    }

    // normalorder
    auto *no = app.add_subcommand("normalorder", "Normal-ordered products of one bosonic mode");
    no->require_subcommand(1);
    unsigned no_power = 0;
    auto *nop = no->add_subcommand("power", "N-fold circle power of :a+ a:");
    nop->add_option("N", no_power)->required();
    std::vector<unsigned> no_exps;
    auto *nopr = no->add_subcommand("product", "circle product of :a+^R a^S: and :a+^M a^N:");
    nopr->add_option("EXPONENTS", no_exps, "R S M N")->required()->expected(4);

    // stirling
    unsigned st_n = 0;
    auto *st = app.add_subcommand("stirling", "Stirling numbers of the second kind S(N, 1..N)");
    st->add_option("N", st_n)->required();
    st->add_flag("--json", as_json, "print the triangle up to N");

    // witt
    auto *witt = app.add_subcommand("witt", "Witt vector computations");
    witt->require_subcommand(1);
    std::string w_u, w_v;
    std::size_t w_n = 0;
    auto *wg = witt->add_subcommand("ghost", "ghost components of a comma-separated vector");
    wg->add_option("W", w_u)->required();
    auto *wa = witt->add_subcommand("add", "Witt sum");
    auto *wm = witt->add_subcommand("mul", "Witt product");
    for (auto *s : {wa, wm}) {
        s->add_option("U", w_u)->required();
        s->add_option("V", w_v)->required();
    }
    auto *wp = witt->add_subcommand("polys", "universal sum and product polynomials up to N");
    wp->add_option("N", w_n)->required()->check(CLI::Range(1, 8));
    wp->add_flag("--json", as_json);
    auto *we = witt->add_subcommand("e2w", "Witt coordinates in terms of e1..eN");
    we->add_option("N", w_n)->required()->check(CLI::Range(1, 12));

    // appendix
    auto *apx = app.add_subcommand("appendix", "Multiplication-table matrices");
    apx->require_subcommand(1);
    std::uint64_t apx_upto = 0;
    std::string apx_kind = "add";
    auto *ag = apx->add_subcommand("gram", "Gram matrix A = m m^T");
    auto *at = apx->add_subcommand("table", "table matrix m");
    for (auto *s : {ag, at}) {
        s->add_option("--upto", apx_upto)->required();
        s->add_option("--kind", apx_kind)->check(CLI::IsMember({"add", "mul"}));
        s->add_flag("--csv", as_csv);
    }

    auto *self = app.add_subcommand("selftest", "Run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::ostream &out = std::cout;
    try {
        if (*cop) {
            const Nat n(cop_n);
            TensorSum t;
            if (cop_kind == "add") t = coproduct_add(n);
            else if (cop_kind == "mul") t = coproduct_mul(n);
            else if (cop_kind == "add-unrenorm") t = coproduct_add_unrenorm(n);
            else t = coproduct_mul_unrenorm(n);
            if (as_json)
                out << json{{"kind", cop_kind}, {"n", n.str()}, {"terms", tensor_json(t)}}.dump() << '\n';
            else
                out << render(t) << '\n';
        } else if (*ant) {
            const Nat n(ant_n);
            if (ant_kind == "add") out << antipode_add(n) << '\n';
            else if (ant_kind == "mul") out << antipode_mul(n).get_str() << '\n';
            else out << antipode_unrenorm(n).get_str() << '\n';
        } else if (*conv) {
            const Cochain f = cochains::by_name(conv_f), g = cochains::by_name(conv_g);
            std::vector<std::pair<std::uint64_t, Rational>> rows;
            if (conv_additive) {
                for (std::uint64_t n = 0; n <= conv_upto; ++n) rows.emplace_back(n, convolve_add(f, g, Nat(n)));
            } else {
                for (std::uint64_t n = 1; n <= conv_upto; ++n) rows.emplace_back(n, dirichlet_convolve(f, g, Nat(n)));
            }
            if (as_csv) {
                out << "n,coefficient\n";
                for (const auto &[n, v] : rows) out << n << ',' << v.get_str() << '\n';
            } else {
                std::vector<std::string> vs;
                for (const auto &r : rows) vs.push_back(r.second.get_str());
                out << join(vs) << '\n';
            }
        } else if (*ser) {
            const auto s = named_series(ser_name, ser_upto);
            if (as_csv) write_csv(out, s);
            else if (as_json) out << json{{"name", ser_name}, {"coeffs", to_strings(s.coeffs())}}.dump() << '\n';
            else out << join(to_strings(s.coeffs())) << '\n';
        } else if (*coc) {
            if (coc_upto == 0) throw domain_error("cocycle: --upto must be >= 1");
            const Cochain phi = cochains::by_name(coc_phi);
            const TwoCochain d2 = coboundary2_table(phi, coc_upto);
            out << "multiplicative: " << (is_multiplicative(phi, coc_upto) ? "yes" : "no") << '\n';
            out << "completely multiplicative: " << (is_completely_multiplicative(phi, coc_upto) ? "yes" : "no")
                << '\n';
            std::string first;
            for (std::uint64_t n = 1; n <= coc_upto && first.empty(); ++n)
                for (std::uint64_t m = 1; m <= coc_upto && first.empty(); ++m)
                    if (d2(n, m) != ((n == 1 && m == 1) ? 1 : 0))
                        first = "(" + std::to_string(n) + "," + std::to_string(m) + ") = " + d2(n, m).get_str();
            out << "coboundary trivial: " << (first.empty() ? "yes" : "no") << '\n';
            if (!first.empty()) out << "first deviation: " << first << '\n';
        } else if (*br) {
            const Nat b(br_b), n(br_n);
            if (br_kind == "sub") out << branch_subtract(b, n) << '\n';
            else if (br_kind == "div") out << branch_divide(b, n) << '\n';
            else out << render_sum(branch_derive(b, n), [](const Nat &k) { return "[" + k.str() + "]"; }) << '\n';
        } else if (*sym) {
            const Partition a = Partition::parse(sym_a), b = Partition::parse(sym_b);
            const bool is_circle = circ->parsed();
            const SymSum s = is_circle ? circle_product(a, b) : schur_product_lr(a, b);
            if (as_json)
                out << json{{"lambda", a.parts()}, {"mu", b.parts()}, {"basis", is_circle ? "monomial" : "schur"},
                            {"terms", symsum_json(s)}}
                           .dump()
                    << '\n';
            else
                out << render(s, is_circle ? "m" : "s") << '\n';
        } else if (*no) {
            if (nop->parsed())
                out << render(circle_power(number_operator(), no_power)) << '\n';
            else
                out << render(circle_op(NormalMonomial{no_exps[0], no_exps[1]}, NormalMonomial{no_exps[2], no_exps[3]})) << '\n';
        } else if (*st) {
            if (as_json) {
                json tri = json::array();
                for (unsigned n = 0; n <= st_n; ++n) {
                    json row = json::array();
                    for (unsigned k = 0; k <= n; ++k) row.push_back(stirling2(n, k).get_str());
                    tri.push_back(row);
                }
                out << json{{"kind", "stirling2"}, {"rows", tri}}.dump() << '\n';
            } else {
                std::vector<std::string> row;
                for (unsigned k = 1; k <= st_n; ++k) row.push_back(stirling2(st_n, k).get_str());
                out << join(row) << '\n';
            }
        } else if (*witt) {
            if (wg->parsed()) {
                out << join(to_strings(ghost(parse_rationals(w_u)))) << '\n';
            } else if (wa->parsed() || wm->parsed()) {
                const auto u = parse_rationals(w_u), v = parse_rationals(w_v);
                out << join(to_strings(wa->parsed() ? witt_add(u, v) : witt_mul(u, v))) << '\n';
            } else if (wp->parsed()) {
                const auto up = universal_polys(w_n);
                if (as_json) {
                    json f = json::array(), g = json::array();
                    for (const auto &p : up.F) f.push_back(p.str());
                    for (const auto &p : up.G) g.push_back(p.str());
                    out << json{{"F", f}, {"G", g}}.dump() << '\n';
                } else {
                    for (std::size_t i = 0; i < w_n; ++i) out << "F" << i + 1 << " = " << up.F[i].str() << '\n';
                    for (std::size_t i = 0; i < w_n; ++i) out << "G" << i + 1 << " = " << up.G[i].str() << '\n';
                }
            } else {
                const auto w = e_to_w(witt_symbols('e', w_n), w_n);
                for (std::size_t i = 0; i < w_n; ++i) out << "w" << i + 1 << " = " << w[i].str() << '\n';
            }
        } else if (*apx) {
            const TableMatrix t = apx_kind == "add" ? table_matrix_add(apx_upto) : table_matrix_mul(apx_upto);
            print_matrix(out, ag->parsed() ? gram_A(t) : t.m, as_csv);
        } else if (*self) {
            return acceptance::run_all(out) ? 0 : 1;
        }
    } catch (const domain_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
