// Command-line front end: homology/cohomology/relative invariants, Alexander
// duals, operator dumps, and the duality verifier. Results go to stdout,
// diagnostics to stderr. Exit codes: 0 success, 1 verification failure,
// 2 usage or input errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <alexdual/alexdual.hpp>

namespace {

using namespace alexdual;

struct Options {
    std::string ring = "z";
    std::string input;  // empty: stdin; leading '{': inline document; else: path
    int n = -1;
    int count = -1;
    std::uint64_t seed = 0;
    bool machine = false;
    bool exhaustive = false;
};

std::string read_input(const Options& opt) {
    if (!opt.input.empty() && opt.input.front() == '{') return opt.input;
    if (!opt.input.empty()) {
        std::ifstream in(opt.input, std::ios::binary);
        if (!in) throw parse_error("cannot open input file '" + opt.input + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
}

SimplicialComplex load_complex(const Options& opt) {
    std::vector<std::string> warnings;
    const SimplicialComplex x = parse_complex(read_input(opt), &warnings);
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
    return x;
}

void print_groups(const char* prefix, const std::vector<GroupInvariants>& groups,
                  int first_degree, bool machine) {
    int degree = first_degree;
    for (const GroupInvariants& g : groups) {
        if (machine)
            std::cout << degree << "\t" << to_string(g) << "\n";
        else
            std::cout << prefix << degree << " = " << to_string(g) << "\n";
        ++degree;
    }
}

int cmd_homology(const Options& opt, Orientation orientation, bool relative_pair) {
    const RingSpec ring = RingSpec::parse(opt.ring);
    const SimplicialComplex x = load_complex(opt);
    const int n = x.ground_set_size();
    GradedChainComplex c =
        relative_pair
            ? relative_chain_complex(SimplicialComplex::full_simplex(n), x, ring)
            : (orientation == Orientation::homological ? reduced_chain_complex(x, ring)
                                                       : reduced_cochain_complex(x, ring));
    std::vector<GroupInvariants> groups;
    for (int i = -1; i <= n - 1; ++i) groups.push_back(homology_invariants(c, i));
    print_groups(orientation == Orientation::homological ? "H~_" : "H~^", groups, -1,
                 opt.machine);
    return 0;
}

int cmd_dual(const Options& opt) {
    std::cout << serialize_complex(load_complex(opt).alexander_dual()) << "\n";
    return 0;
}

std::string face_labels(const std::vector<Face>& faces) {
    std::string out;
    for (Face f : faces) out += " " + to_string(f);
    return out;
}

void print_matrix_rows(const IntMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            std::cout << (c == 0 ? "" : " ") << m(r, c);
        std::cout << "\n";
    }
}

int cmd_matrices(const Options& opt) {
    const SimplicialComplex x = load_complex(opt);
    const GradedChainComplex c = reduced_chain_complex(x, RingSpec::integers());
    for (int i = c.min_degree() + 1; i <= c.max_degree(); ++i) {
        const IntMatrix m = c.operator_matrix(i);
        std::cout << "d_" << i << " : C_" << i << " -> C_" << (i - 1) << " [" << m.rows()
                  << " x " << m.cols() << "]\n";
        std::cout << "cols:" << face_labels(c.basis(i)) << "\n";
        std::cout << "rows:" << face_labels(c.basis(i - 1)) << "\n";
        print_matrix_rows(m);
        std::cout << "\n";
    }
    return 0;
}

int cmd_phi(const Options& opt) {
    const SimplicialComplex x = load_complex(opt);
    const int n = x.ground_set_size();
    bool all_ok = true;
    for (int j = -1; j <= n; ++j) {
        const PhiMap phi = build_phi(x, j);
        std::cout << "phi_" << j << " : R_" << j << " -> C^" << (n - j - 2) << " ["
                  << phi.matrix.rows() << " x " << phi.matrix.cols() << "]\n";
        std::cout << "cols:" << face_labels(phi.source_basis) << "\n";
        std::cout << "rows:" << face_labels(phi.target_basis) << "\n";
        print_matrix_rows(phi.matrix);
        const bool ok = check_commutation(x, j);
        all_ok = all_ok && ok;
        std::cout << "commutation at j=" << j << ": " << (ok ? "ok" : "FAILED") << "\n\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_verify(const Options& opt) {
    const RingSpec ring = RingSpec::parse(opt.ring);
    if (opt.exhaustive) {
        if (opt.n < 0) throw std::invalid_argument("verify --exhaustive requires --n");
        std::uint64_t matched = 0, total = 0;
        enumerate_complexes(opt.n, [&](const SimplicialComplex& x) {
            const DualityReport report = verify_duality(x, ring);
            std::cout << verifier_line(report) << "\n";
            if (!report.all_matched) std::cout << report_details(report);
            matched += report.all_matched ? 1 : 0;
            ++total;
        });
        std::cout << matched << "/" << total << " matched\n";
        return matched == total ? 0 : 1;
    }
    const DualityReport report = verify_duality(load_complex(opt), ring);
    std::cout << verifier_line(report) << "\n";
    std::cout << report_details(report);
    return report.all_matched ? 0 : 1;
}

int cmd_enumerate(const Options& opt) {
    if (opt.n < 0) throw std::invalid_argument("enumerate requires --n");
    if (opt.count >= 0) {
        for (const SimplicialComplex& x : sample_complexes(opt.n, opt.count, opt.seed))
            std::cout << serialize_complex(x) << "\n";
        return 0;
    }
    enumerate_complexes(opt.n, [](const SimplicialComplex& x) {
        std::cout << serialize_complex(x) << "\n";
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact simplicial (co)homology and Alexander duality toolkit"};
    app.require_subcommand(1);
    Options opt;

    const auto add_ring = [&](CLI::App* cmd) {
        cmd->add_option("--ring", opt.ring, "Coefficient ring: z, q, or fp:<p>")
            ->default_val("z");
    };
    const auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", opt.input,
                        "Input path, or an inline document starting with '{' "
                        "(default: stdin)");
    };
    const auto add_machine = [&](CLI::App* cmd) {
        cmd->add_flag("--machine", opt.machine, "Machine-readable output");
    };

    CLI::App* homology = app.add_subcommand(
        "homology", "Reduced homology invariants of the input complex");
    CLI::App* cohomology = app.add_subcommand(
        "cohomology", "Reduced cohomology invariants of the input complex");
    CLI::App* relative = app.add_subcommand(
        "relative",
        "Relative homology of the pair (full simplex, input complex)");
    CLI::App* dual =
        app.add_subcommand("dual", "Alexander dual of the input complex");
    CLI::App* matrices = app.add_subcommand(
        "matrices", "Boundary operator matrices of the reduced chain complex");
    CLI::App* phi = app.add_subcommand(
        "phi", "Duality isomorphism matrices and commutation checks per degree");
    CLI::App* verify = app.add_subcommand(
        "verify", "Check H~_i(X) against H~^(n-i-3)(X*) degree by degree");
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "Stream complexes on {1..n}: exhaustive, or sampled with --count");

    for (CLI::App* cmd : {homology, cohomology, relative, verify}) add_ring(cmd);
    for (CLI::App* cmd : {homology, cohomology, relative, dual, matrices, phi, verify})
        add_input(cmd);
    for (CLI::App* cmd :
         {homology, cohomology, relative, dual, matrices, phi, verify, enumerate})
        add_machine(cmd);

    verify->add_flag("--exhaustive", opt.exhaustive,
                     "Verify every complex on {1..n} (requires --n)");
    verify->add_option("--n", opt.n, "Ground set size for --exhaustive");
    enumerate->add_option("--n", opt.n, "Ground set size")->required();
    enumerate->add_option("--count", opt.count, "Sample this many random complexes");
    enumerate->add_option("--seed", opt.seed, "Seed for --count sampling")
        ->default_val(0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (homology->parsed()) return cmd_homology(opt, Orientation::homological, false);
        if (cohomology->parsed())
            return cmd_homology(opt, Orientation::cohomological, false);
        if (relative->parsed()) return cmd_homology(opt, Orientation::homological, true);
        if (dual->parsed()) return cmd_dual(opt);
        if (matrices->parsed()) return cmd_matrices(opt);
        if (phi->parsed()) return cmd_phi(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (enumerate->parsed()) return cmd_enumerate(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
