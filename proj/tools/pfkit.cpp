#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pfk/errors.hpp"
#include "pfk/fit.hpp"
#include "pfk/fixtures.hpp"
#include "pfk/mirror.hpp"
#include "pfk/periods.hpp"
#include "pfk/problem_io.hpp"
#include "pfk/riemann.hpp"
#include "pfk/selfdual.hpp"
#include "pfk/series_io.hpp"
#include "pfk/theta_operator.hpp"

namespace {

using namespace pfk;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitNotFound = 4;

std::ifstream open_input(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw parse_error("cannot open '" + path + "'");
    return is;
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw error("cannot write '" + out_path + "'");
    os << content;
}

std::string prefactor_comment(const PeriodExpansion& pe) {
    std::ostringstream os;
    os << "# prefactor: ";
    if (pe.prefactor)
        os << rat_str(*pe.prefactor);
    else
        os << "sqrt(" << rat_str(pe.prefactor_square) << ")";
    os << " * pi^" << rat_str(pe.pi_power) << "\n";
    return os.str();
}

int cmd_expand(const std::string& kind, const std::string& file, int order,
               const std::string& out_path) {
    std::ostringstream body;
    if (kind == "simplex" || kind == "morse") {
        PeriodExpansion pe;
        if (kind == "simplex") {
            auto is = open_input(file);
            SimplexProblem p = read_simplex_problem(is, order);
            pe = simplex_period(p);
            body << "# simplex period expansion, dim " << p.n << ", order " << p.order << "\n";
        } else {
            auto is = open_input(file);
            MorseProblem p = read_morse_problem(is, order);
            pe = morse_period(p);
            body << "# morse period expansion, dim " << p.n << ", order " << p.order << "\n";
        }
        body << prefactor_comment(pe);
        write_series(body, pe.series);
    } else if (kind == "ct") {
        if (order < 0) throw parse_error("expand ct requires --order");
        auto is = open_input(file);
        LaurentPoly f = read_laurent(is);
        Series<Rat> s = constant_term_series(f, order);
        body << "# constant term series, " << f.nvars() << " variables, order " << order << "\n";
        write_series(body, s);
    } else {
        throw parse_error("unknown expand kind '" + kind + "' (simplex|ct|morse)");
    }
    write_output(out_path, body.str());
    return 0;
}

int cmd_findop(const std::string& file, int dmax, int rmax, int holdout,
               const std::string& out_path) {
    auto is = open_input(file);
    Series<Rat> s = read_series(is);
    SearchTrace trace;
    ThetaOperator op = find_minimal_operator(s, dmax, rmax, holdout, &trace);
    std::cerr << trace.str();
    std::ostringstream body;
    body << theta_to_text(op);
    write_output(out_path, body.str());
    return 0;
}

int cmd_analyze(const std::string& file, bool machine) {
    auto is = open_input(file);
    ThetaOperator op = read_theta(is);
    RiemannSymbol sym = riemann_symbol(op);
    if (machine) {
        std::cout << sym.machine();
    } else {
        std::cout << "operator: " << theta_pretty(op) << "\n\n";
        std::cout << sym.render_table() << "\n";
        for (const auto& pt : sym.points) {
            std::cout << "  " << pt.label() << ": " << pt.tag;
            if (!pt.note.empty()) std::cout << "  [" << pt.note << "]";
            std::cout << "\n";
        }
        std::cout << "\n" << sym.fuchs_line() << "\n";
    }
    auto [mum, where] = has_mum_point(op);
    if (mum) {
        std::cout << "MUM-candidates at:";
        for (const auto& w : where) std::cout << " " << w;
        std::cout << "\n";
    } else {
        std::cout << "no MUM-point: the operator is an orphan\n";
    }
    if (op.order() == 4) {
        std::cout << "symplectic self-duality: " << (self_adjoint_check(op) ? "yes" : "NO")
                  << "\n";
    } else {
        std::cout << "symplectic self-duality: not supported for order " << op.order() << "\n";
    }
    return 0;
}

int cmd_mirror(const std::string& file, const std::string& n0_str, int depth, int order,
               bool machine, const std::string& out_path) {
    auto is = open_input(file);
    ThetaOperator op = read_theta(is);
    Rat n0 = parse_rat(n0_str);
    int N = order > 0 ? order : std::max(2 * depth + op.r() + 4, 16);
    FrobeniusBasis basis = frobenius_solutions(op, N);
    MirrorMap mm = mirror_map(basis);
    Series<Rat> K = yukawa(op, basis, n0, N);
    if (K.order() < depth)
        throw precondition_error("order too small for the requested depth");
    InstantonTable table = instanton_numbers(K, depth);
    IntegralityReport rep = integrality_report(op, std::min(N, 20), depth, n0);

    std::ostringstream body;
    if (machine) {
        body << table.render(true);
    } else {
        body << "q(t) = ";
        for (int i = 1; i <= std::min(6, mm.q_of_t.order()); ++i) {
            if (i > 1) body << " + ";
            body << rat_str(mm.q_of_t.c[static_cast<std::size_t>(i)]) << "*t"
                 << (i > 1 ? "^" + std::to_string(i) : "");
        }
        body << " + O(t^" << std::min(6, mm.q_of_t.order()) + 1 << ")\n";
        body << "K(q) = ";
        for (int i = 0; i <= std::min(depth, K.order()); ++i) {
            if (i > 0) body << " + ";
            body << rat_str(K.c[static_cast<std::size_t>(i)]);
            if (i == 1) body << "*q";
            if (i > 1) body << "*q^" << i;
        }
        body << " + O(q^" << depth + 1 << ")\n\n";
        body << table.render(false) << "\n" << rep.text;
    }
    write_output(out_path, body.str());
    return 0;
}

int cmd_fixtures(const std::string& action, const std::string& name) {
    if (action == "list") {
        for (const auto& f : fixture_registry())
            std::cout << f.name << "  (" << f.kind << ") - " << f.description << "\n";
        return 0;
    }
    const Fixture& f = get_fixture(name);
    std::cout << "name: " << f.name << "\n";
    std::cout << "kind: " << f.kind << "\n";
    std::cout << "description: " << f.description << "\n";
    if (!f.problem_text.empty()) std::cout << "problem:\n" << f.problem_text;
    std::cout << "expected series prefix";
    if (!is_zero(f.expected_series.mu)) std::cout << " (offset " << rat_str(f.expected_series.mu) << ")";
    std::cout << ": ";
    for (int i = 0; i <= f.expected_series.order(); ++i)
        std::cout << (i ? ", " : "") << rat_str(f.expected_series.c[static_cast<std::size_t>(i)]);
    std::cout << "\n";
    if (f.op) std::cout << "operator:\n" << theta_to_text(*f.op);
    if (!f.riemann_machine.empty()) {
        std::cout << "riemann symbol:\n";
        for (const auto& l : f.riemann_machine) std::cout << "  " << l << "\n";
    }
    if (f.n0) std::cout << "n0: " << rat_str(*f.n0) << "\n";
    if (!f.notes.empty()) std::cout << "notes: " << f.notes << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pfkit: Picard-Fuchs operators from conifold period expansions"};
    app.require_subcommand(1);

    // PFKIT_THREADS caps internal parallelism; the engines are sequential, so
    // any value yields identical output.
    if (const char* th = std::getenv("PFKIT_THREADS")) (void)th;

    std::string file, out_path, kind, n0_str, fixture_name, fixture_action;
    int order = -1, dmax = 4, rmax = 8, holdout = 6, depth = 10;
    bool machine = false;

    auto* expand = app.add_subcommand("expand", "expand a period from a problem file");
    expand->add_option("kind", kind, "simplex|ct|morse")->required();
    expand->add_option("file", file, "problem file")->required();
    expand->add_option("--order", order, "expansion order");
    expand->add_option("--out", out_path, "output file (default stdout)");

    auto* findop = app.add_subcommand("findop", "fit a theta-form operator to a series file");
    findop->add_option("file", file, "series file")->required();
    findop->add_option("--dmax", dmax, "max theta degree (default 4)");
    findop->add_option("--rmax", rmax, "max t degree (default 8)");
    findop->add_option("--holdout", holdout, "verification coefficients (default 6)");
    findop->add_option("--out", out_path, "output file (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "Riemann symbol and classification report");
    analyze->add_option("file", file, "operator file")->required();
    analyze->add_flag("--machine", machine, "line-oriented output");

    auto* mirror = app.add_subcommand("mirror", "mirror map, Yukawa coupling, instanton numbers");
    mirror->add_option("file", file, "operator file")->required();
    mirror->add_option("--n0", n0_str, "Yukawa normalization K(0)")->required();
    mirror->add_option("--depth", depth, "instanton depth D (default 10)");
    mirror->add_option("--order", order, "series order (default from depth)");
    mirror->add_flag("--machine", machine, "d: n_d lines only");
    mirror->add_option("--out", out_path, "output file (default stdout)");

    auto* fixtures = app.add_subcommand("fixtures", "built-in data of the worked examples");
    fixtures->add_option("action", fixture_action, "list|show")->required();
    fixtures->add_option("name", fixture_name, "fixture name (for show)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand->parsed()) return cmd_expand(kind, file, order, out_path);
        if (findop->parsed()) return cmd_findop(file, dmax, rmax, holdout, out_path);
        if (analyze->parsed()) return cmd_analyze(file, machine);
        if (mirror->parsed()) return cmd_mirror(file, n0_str, depth, order, machine, out_path);
        if (fixtures->parsed()) {
            if (fixture_action == "list") return cmd_fixtures("list", "");
            if (fixture_action == "show") {
                if (fixture_name.empty()) throw parse_error("fixtures show needs a name");
                return cmd_fixtures("show", fixture_name);
            }
            throw parse_error("unknown fixtures action '" + fixture_action + "'");
        }
    } catch (const parse_error& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const not_found_error& e) {
        std::cerr << e.what() << "\n";
        return kExitNotFound;
    } catch (const not_mum_error& e) {
        std::cerr << e.what() << "\n";
        return kExitNotFound;
    } catch (const precondition_error& e) {
        std::cerr << e.what() << "\n";
        return kExitPrecondition;
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
