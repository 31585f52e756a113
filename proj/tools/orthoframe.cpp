#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "orthoframe/attitude.hpp"
#include "orthoframe/io.hpp"
#include "orthoframe/polar.hpp"
#include "orthoframe/quat.hpp"
#include "orthoframe/spectral.hpp"
#include "orthoframe/stiefel.hpp"

namespace of = orthoframe;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

struct Options {
    bool exact = false;
    bool report = false;
    // loose default so rotations printed to a few decimals still pass
    double tol = 1e-2;
    int digits() const { return exact ? 17 : 6; }
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw of::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

of::Matrix load_matrix(const std::string& path) { return of::parse_matrix(slurp(path)); }

void print_quat(const of::Quaternion& q, int digits) {
    std::cout << of::format_real(q.x, digits) << ' ' << of::format_real(q.y, digits) << ' '
              << of::format_real(q.z, digits) << ' ' << of::format_real(q.w, digits) << '\n';
}

// A convert input is a quaternion literal when it holds exactly four reals.
bool try_parse_quat(const std::string& text, of::Quaternion& q) {
    std::istringstream in(text);
    double v[4];
    if (!(in >> v[0] >> v[1] >> v[2] >> v[3])) return false;
    std::string rest;
    if (in >> rest) return false;
    q = {v[0], v[1], v[2], v[3]};
    return true;
}

int run_convert(const std::string& direction, const std::string& input, const Options& opt) {
    if (direction == "q2m") {
        of::Quaternion q;
        if (!try_parse_quat(input, q)) {
            const std::string text = slurp(input);
            if (!try_parse_quat(text, q))
                throw of::ParseError("q2m input must be four reals: x y z w");
        }
        std::cout << of::format_matrix(of::phi_so3(of::normalize(q)), opt.digits());
        return 0;
    }
    const of::Matrix m = load_matrix(input);
    print_quat(of::quat_from_rotation(m, opt.tol), opt.digits());
    return 0;
}

int run_orthogonalize(const std::string& method, const std::string& input, bool rescale,
                      const Options& opt) {
    const of::Matrix m = load_matrix(input);
    of::Matrix out;
    if (method == "landis") {
        out = of::orthogonalize_rational(m, rescale);
    } else if (method == "polar") {
        out = of::polar_decompose(m).rotation;
    } else {
        const of::SvdFactors f = of::svd_via_polar(m);
        out = f.u * f.v.transpose();
    }
    std::cout << of::format_matrix(out, opt.digits());
    if (opt.report)
        std::cout << "residual " << of::format_real((out - m).norm_fro(), opt.digits()) << '\n';
    return 0;
}

int run_wahba(const std::string& method, const std::string& input, const Options& opt) {
    std::istringstream in(slurp(input));
    const of::WahbaInput parsed = of::parse_wahba(in);
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << '\n';
    of::Matrix attitude;
    if (method == "davenport") {
        const of::Quaternion q = of::solve_wahba_davenport(parsed.problem);
        print_quat(q, opt.digits());
        attitude = of::phi_so3(q);
    } else {
        attitude = of::solve_wahba_svd(parsed.problem);
        std::cout << of::format_matrix(attitude, opt.digits());
    }
    std::cout << "loss " << of::format_real(of::wahba_loss(attitude, parsed.problem), opt.digits())
              << '\n';
    return 0;
}

int run_parity(const std::string& input, int path_samples, const Options& opt) {
    const of::Matrix m = load_matrix(input);
    const of::CanonicalReduction red = of::reduce_to_canonical(m, opt.tol);
    std::cout << (red.parity > 0 ? "+1" : "-1") << '\n';
    for (int k = 0; k < path_samples; ++k) {
        const double tau = path_samples == 1 ? 0.0 : double(k) / (path_samples - 1);
        std::cout << "# tau " << of::format_real(tau, opt.digits()) << '\n'
                  << of::format_matrix(red.path.sample(tau), opt.digits());
    }
    return 0;
}

int run_factor(const std::string& kind, const std::string& input, const Options& opt) {
    const of::Matrix m = load_matrix(input);
    const int d = opt.digits();
    if (kind == "qr") {
        const of::QrFactors f = of::qr_givens(m);
        if (f.singular) std::cerr << "warning: R has a numerically zero diagonal entry\n";
        std::cout << "Q\n" << of::format_matrix(f.q, d) << "R\n" << of::format_matrix(f.r, d);
        if (opt.report)
            std::cout << "residual " << of::format_real((f.q * f.r - m).norm_fro(), d) << '\n';
    } else if (kind == "polar") {
        const of::PolarFactors f = of::polar_decompose(m);
        std::cout << "R\n" << of::format_matrix(f.rotation, d) << "P\n"
                  << of::format_matrix(f.stretch, d) << "X\n" << of::format_matrix(f.log_stretch, d);
        if (opt.report)
            std::cout << "residual "
                      << of::format_real((f.rotation * f.stretch - m).norm_fro(), d) << '\n';
    } else if (kind == "svd") {
        const of::SvdFactors f = of::svd_via_polar(m);
        std::cout << "W\n" << of::format_matrix(f.u, d) << "Gamma\n";
        for (std::size_t k = 0; k < f.singular_values.size(); ++k) {
            if (k) std::cout << ' ';
            std::cout << of::format_real(f.singular_values[k], d);
        }
        std::cout << "\nV\n" << of::format_matrix(f.v, d);
        if (opt.report) {
            of::Matrix g(f.singular_values.size(), f.singular_values.size());
            for (std::size_t k = 0; k < f.singular_values.size(); ++k)
                g(k, k) = f.singular_values[k];
            std::cout << "residual "
                      << of::format_real((f.u * g * f.v.transpose() - m).norm_fro(), d) << '\n';
        }
    } else {  // jacobi
        const of::SymmetricMatrix sym(m);
        const of::SpectralFactors f = of::jacobi_eigendecomposition(sym);
        std::cout << "eigenvalues\n";
        for (std::size_t k = 0; k < f.eigenvalues.size(); ++k) {
            if (k) std::cout << ' ';
            std::cout << of::format_real(f.eigenvalues[k], d);
        }
        std::cout << "\nU\n" << of::format_matrix(f.eigenvectors, d);
        if (opt.report) {
            of::Matrix lam(f.eigenvalues.size(), f.eigenvalues.size());
            for (std::size_t k = 0; k < f.eigenvalues.size(); ++k) lam(k, k) = f.eigenvalues[k];
            const of::Matrix rec = f.eigenvectors * lam * f.eigenvectors.transpose();
            std::cout << "residual " << of::format_real((rec - m).norm_fro(), d) << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthoframe: orthogonal frames, factorizations and attitude determination"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--exact", opt.exact, "print 17 significant digits");
    app.add_flag("--report", opt.report, "print reconstruction residuals");
    app.add_option("--tol", opt.tol, "orthogonality tolerance for matrix inputs");

    std::string input, direction, method = "landis", wahba_method = "davenport", kind;
    bool rescale = false;
    int path_samples = 0;

    auto* convert = app.add_subcommand("convert", "quaternion <-> rotation matrix");
    convert->add_option("direction", direction, "q2m or m2q")
        ->required()
        ->check(CLI::IsMember({"q2m", "m2q"}));
    convert->add_option("input", input, "quaternion literal, file path, or - for stdin")->required();

    auto* ortho = app.add_subcommand("orthogonalize", "nearest rotation to a perturbed matrix");
    ortho->add_option("input", input, "matrix file or -")->required();
    ortho->add_option("--method", method, "landis, polar or svd")
        ->check(CLI::IsMember({"landis", "polar", "svd"}));
    ortho->add_flag("--rescale-rows", rescale, "rescale output rows toward unit norm");

    auto* wahba = app.add_subcommand("wahba", "solve a vector-matching attitude problem");
    wahba->add_option("input", input, "observation file or -")->required();
    wahba->add_option("--method", wahba_method, "davenport or svd")
        ->check(CLI::IsMember({"davenport", "svd"}));

    auto* par = app.add_subcommand("parity", "path component of an orthogonal matrix");
    par->add_option("input", input, "matrix file or -")->required();
    par->add_option("--path", path_samples, "also print N samples of the reducing path");

    auto* factor = app.add_subcommand("factor", "matrix factorizations");
    factor->add_option("kind", kind, "qr, polar, svd or jacobi")
        ->required()
        ->check(CLI::IsMember({"qr", "polar", "svd", "jacobi"}));
    factor->add_option("input", input, "matrix file or -")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitParse;
    }

    try {
        if (convert->parsed()) return run_convert(direction, input, opt);
        if (ortho->parsed()) return run_orthogonalize(method, input, rescale, opt);
        if (wahba->parsed()) return run_wahba(wahba_method, input, opt);
        if (par->parsed()) return run_parity(input, path_samples, opt);
        if (factor->parsed()) return run_factor(kind, input, opt);
    } catch (const of::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return 0;
}
