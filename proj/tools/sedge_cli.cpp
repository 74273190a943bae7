#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "sedge/sedge.hpp"

namespace {

sedge::graph read_graph(const std::string& path) {
    if (path == "-") return sedge::read_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw sedge::parse_error("cannot open '" + path + "'");
    return sedge::read_edge_list(in);
}

void write_graph(const std::string& path, const sedge::graph& g) {
    if (path == "-") {
        sedge::write_edge_list(std::cout, g);
        return;
    }
    std::ofstream out(path);
    if (!out) throw sedge::parse_error("cannot open '" + path + "' for writing");
    sedge::write_edge_list(out, g);
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw sedge::parse_error("cannot open '" + path + "' for writing");
    out << text;
}

std::string spectrum_json(const sedge::spectrum& s) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "{\"dimension\":" << s.source_dimension << ",\"eigenvalues\":[";
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
        if (i) os << ',';
        os << s.eigenvalues[i];
    }
    os << "]}";
    return os.str();
}

std::string zeta_json(const char* method, const sedge::zeta_reciprocal& z) {
    std::ostringstream os;
    os << "{\"method\":\"" << method << "\",\"r_minus_1\":" << z.r_minus_1
       << ",\"cross_multiplied\":" << (z.cross_multiplied ? "true" : "false")
       << ",\"coefficients\":[";
    for (int k = 0; k <= z.poly.degree(); ++k) {
        if (k) os << ',';
        os << z.poly.coeff(k).str();
    }
    os << "]}";
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"double covers of line graphs: constructions, spectra, zeta functions"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named graph family as an edge list");
    std::string family;
    std::vector<int> params;
    std::string gen_out = "-";
    gen->add_option("family", family,
                    "cycle|path|complete|star|complete_bipartite|crown|prism")->required();
    gen->add_option("params", params, "family size parameters")->expected(1, 2);
    gen->add_option("-o,--output", gen_out, "output path ('-' for stdout)");

    // transform
    auto* transform = app.add_subcommand("transform", "map an edge list through a construction");
    std::string kind;
    int iterate = 1;
    std::string t_in = "-", t_out = "-";
    transform->add_option("kind", kind, "gamma|line|kronecker2")->required();
    transform->add_option("--iterate", iterate, "apply the transform k times (default 1)");
    transform->add_option("-i,--input", t_in, "input path ('-' for stdin)");
    transform->add_option("-o,--output", t_out, "output path ('-' for stdout)");

    // matrix
    auto* matrix = app.add_subcommand("matrix", "emit a construction matrix as CSV");
    std::string which;
    std::string m_in = "-", m_out = "-";
    matrix->add_option("which", which, "M|gammaA|PQ")->required();
    matrix->add_option("-i,--input", m_in, "input path ('-' for stdin)");
    matrix->add_option("-o,--output", m_out, "output path ('-' for stdout)");

    // zeta
    auto* zeta = app.add_subcommand("zeta", "reciprocal Ihara zeta polynomial");
    std::string method = "hashimoto";
    bool factor = false, as_json = false;
    std::string z_in = "-";
    zeta->add_option("--method", method, "hashimoto|bass|both (default hashimoto)");
    zeta->add_flag("--factor", factor, "print the cover factorizations with exact quotients");
    zeta->add_flag("--json", as_json, "emit JSON coefficient form");
    zeta->add_option("-i,--input", z_in, "input path ('-' for stdin)");

    // spectrum / energy
    auto* spectrum_cmd = app.add_subcommand("spectrum", "adjacency spectrum as JSON");
    std::string s_in = "-";
    spectrum_cmd->add_option("-i,--input", s_in, "input path ('-' for stdin)");

    auto* energy_cmd = app.add_subcommand("energy", "graph energy as JSON");
    std::string e_in = "-";
    energy_cmd->add_option("-i,--input", e_in, "input path ('-' for stdin)");

    // iso
    auto* iso = app.add_subcommand("iso", "exit 0 when the two graphs are isomorphic, 1 otherwise");
    std::string iso_a, iso_b;
    int iso_bound = 64;
    iso->add_option("a", iso_a, "first edge list ('-' for stdin)")->required();
    iso->add_option("b", iso_b, "second edge list ('-' for stdin)")->required();
    iso->add_option("--bound", iso_bound, "vertex bound for the search (default 64)");

    // verify / corpus
    auto* verify = app.add_subcommand("verify", "run the verification suite on one graph");
    std::string v_in;
    bool v_timings = false;
    double tolerance = 1e-8;
    unsigned seed = 0;
    verify->add_option("input", v_in, "edge list path ('-' for stdin)")->required();
    verify->add_flag("--timings", v_timings, "include per-check timings in the JSON record");
    verify->add_option("--tolerance", tolerance, "energy comparison tolerance (default 1e-8)");
    verify->add_option("--seed", seed, "seed for the relabeling spot checks (default 0)");

    auto* corpus = app.add_subcommand("corpus", "verify every connected class up to --nmax");
    int nmax = 6;
    int jobs = 1;
    bool c_timings = false;
    double c_tolerance = 1e-8;
    unsigned c_seed = 0;
    corpus->add_option("--nmax", nmax, "largest vertex count (default 6, max 7)");
    corpus->add_option("--jobs", jobs, "worker threads (default 1)");
    corpus->add_flag("--timings", c_timings, "include per-check timings in the JSON records");
    corpus->add_option("--tolerance", c_tolerance, "energy comparison tolerance (default 1e-8)");
    corpus->add_option("--seed", c_seed, "seed for the relabeling spot checks (default 0)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            write_graph(gen_out, sedge::generate(family, params));
            return 0;
        }
        if (*transform) {
            if (iterate < 0) throw sedge::invalid_parameter_error("--iterate must be nonnegative");
            sedge::graph g = read_graph(t_in);
            for (int k = 0; k < iterate; ++k) {
                if (kind == "gamma") g = sedge::symmetric_edge_graph(g);
                else if (kind == "line") g = sedge::line_graph(g);
                else if (kind == "kronecker2") g = sedge::kronecker_double_cover(g).cover;
                else throw sedge::invalid_parameter_error("unknown transform '" + kind + "'");
            }
            write_graph(t_out, g);
            return 0;
        }
        if (*matrix) {
            sedge::graph g = read_graph(m_in);
            std::string csv;
            if (which == "M") {
                csv = sedge::make_edge_adjacency_matrix(g).entries.to_csv();
            } else if (which == "gammaA") {
                auto m = sedge::make_edge_adjacency_matrix(g);
                csv = (m.entries + m.entries.transposed()).to_csv();
            } else if (which == "PQ") {
                auto cover = sedge::kronecker_double_cover(g);
                auto lg = sedge::labeled_cover_line_graph(g, cover.labeling);
                csv = sedge::adjacency_matrix(lg).to_csv();
            } else {
                throw sedge::invalid_parameter_error("unknown matrix '" + which + "'");
            }
            write_text(m_out, csv);
            return 0;
        }
        if (*zeta) {
            sedge::graph g = read_graph(z_in);
            std::ostringstream out;
            auto print = [&](const char* name, const sedge::zeta_reciprocal& z) {
                if (as_json) out << zeta_json(name, z) << "\n";
                else out << name << ": " << sedge::to_human(z.poly) << "\n";
            };
            if (method == "hashimoto" || method == "both")
                print("hashimoto", sedge::zeta_reciprocal_hashimoto(g));
            if (method == "bass" || method == "both")
                print("bass", sedge::zeta_reciprocal_bass(g));
            if (method != "hashimoto" && method != "bass" && method != "both")
                throw sedge::invalid_parameter_error("unknown method '" + method + "'");
            if (factor) {
                if (!sedge::is_connected(g))
                    throw sedge::invalid_parameter_error("--factor needs a connected graph");
                auto fr = sedge::verify_factorizations(g);
                out << "zeta_line: " << sedge::to_human(fr.zeta_line) << "\n";
                out << "symmetric_edge_quotient: "
                    << sedge::to_human(sedge::divide_exact(fr.zeta_gamma, fr.zeta_line)) << "\n";
                out << "line_of_cover_quotient: "
                    << sedge::to_human(sedge::divide_exact(fr.zeta_line_cover, fr.zeta_line)) << "\n";
                out << "cover_of_line_quotient: "
                    << sedge::to_human(sedge::divide_exact(fr.zeta_cover_line, fr.zeta_line)) << "\n";
                for (const auto& c : fr.checks)
                    out << c.name << ": " << to_string(c.status) << "\n";
            }
            std::cout << out.str();
            return 0;
        }
        if (*spectrum_cmd) {
            std::cout << spectrum_json(sedge::graph_spectrum(read_graph(s_in))) << "\n";
            return 0;
        }
        if (*energy_cmd) {
            std::ostringstream os;
            os << std::setprecision(17) << "{\"energy\":" << sedge::energy(read_graph(e_in)) << "}";
            std::cout << os.str() << "\n";
            return 0;
        }
        if (*iso) {
            if (iso_a == "-" && iso_b == "-")
                throw sedge::invalid_parameter_error("only one input may be stdin");
            sedge::graph a = read_graph(iso_a);
            sedge::graph b = read_graph(iso_b);
            return sedge::are_isomorphic(a, b, sedge::iso_options{iso_bound}) ? 0 : 1;
        }
        if (*verify) {
            sedge::harness_options opt;
            opt.tolerance = tolerance;
            opt.seed = seed;
            auto rep = sedge::check_suite(read_graph(v_in), opt);
            std::cout << sedge::report_to_json(rep, v_timings).dump() << "\n";
            return rep.all_passed() ? 0 : 1;
        }
        if (*corpus) {
            sedge::harness_options opt;
            opt.tolerance = c_tolerance;
            opt.seed = c_seed;
            auto result = sedge::run_corpus(nmax, opt, jobs);
            for (const auto& rep : result.reports)
                std::cout << sedge::report_to_json(rep, c_timings).dump() << "\n";
            std::cerr << sedge::corpus_summary(result);
            return result.all_passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
