// qig: command-line surface over the density-matrix geometry library.
//
// Exit codes: 0 success, 1 selftest failure, 2 parse error, 3 validation
// error, 4 contract violation.

#include "qig/io.hpp"
#include "qig/legendre.hpp"
#include "qig/metric.hpp"
#include "qig/numcheck.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace qig;

constexpr int kExitOk = 0;
constexpr int kExitSelftest = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitContract = 4;

double validation_tolerance() {
    if (const char* env = std::getenv("QIG_TOL")) {
        char* end = nullptr;
        const double tol = std::strtod(env, &end);
        if (end != env && tol > 0.0) return tol;
        throw ParseError("QIG_TOL must be a positive number");
    }
    return 1e-10;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

struct Cli {
    double tol = 1e-10;

    DensityMatrix load_density(const std::string& path) const {
        return validate_density(read_matrix_document(path, tol).matrix, tol);
    }

    Matrix load_hermitian(const std::string& path) const {
        return hermitize(read_matrix_document(path, tol).matrix);
    }

    CenteredObservable load_centered(const std::string& rho_path,
                                     const std::string& a_path) const {
        DensityMatrix rho = load_density(rho_path);
        return CenteredObservable(rho, load_hermitian(a_path));
    }
};

json arc_point_json(const ExponentialArc& arc, double t) {
    json doc = matrix_to_json(arc.point(t).matrix());
    doc["t"] = t;
    doc["alpha"] = arc.alpha(t);
    return doc;
}

int run_selftest(const std::vector<int>& n_list, int samples, std::uint64_t seed,
                 bool as_json) {
    std::vector<CheckReport> reports = run_suite(n_list, samples, seed);
    if (as_json) {
        json out = json::array();
        for (const CheckReport& r : reports) out.push_back(report_to_json(r));
        emit(out);
    } else {
        int passed = 0;
        for (const CheckReport& r : reports) {
            std::cout << to_text_line(r) << "\n";
            if (r.passed) ++passed;
        }
        std::cout << "passed " << passed << "/" << reports.size() << " checks\n";
    }
    for (const CheckReport& r : reports)
        if (!r.passed) return kExitSelftest;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Information geometry of non-degenerate density matrices"};
    app.require_subcommand(1);

    std::string rho_path;
    std::string sigma_path;
    std::string a_path;
    std::string v_path;
    double t_value = 0.0;
    int grid = 0;
    std::string kind;
    int n = 0;
    std::uint64_t seed = 42;
    int samples = 50;
    std::vector<int> n_list = {2, 3, 4};
    bool as_json = false;

    auto* divergence = app.add_subcommand("divergence", "Relative entropy D(rho||sigma)");
    divergence->add_option("rho", rho_path)->required();
    divergence->add_option("sigma", sigma_path)->required();

    auto* arc = app.add_subcommand("arc", "Exponential arc points and normalization");
    arc->add_option("rho", rho_path)->required();
    arc->add_option("sigma", sigma_path)->required();
    auto* t_opt = arc->add_option("--t", t_value, "Arc parameter");
    auto* grid_opt = arc->add_option("--grid", grid, "Number of segments on [0, 1]");
    t_opt->excludes(grid_opt);

    auto* chart_cmd = app.add_subcommand("chart", "Chart value c_rho(sigma)");
    chart_cmd->add_option("rho", rho_path)->required();
    chart_cmd->add_option("sigma", sigma_path)->required();

    auto* chart_inv = app.add_subcommand("chart-inverse", "State with given chart value");
    chart_inv->add_option("rho", rho_path)->required();
    chart_inv->add_option("a", a_path)->required();

    auto* kubo_cmd = app.add_subcommand("kubo", "Kubo transform of an observable");
    kubo_cmd->add_option("rho", rho_path)->required();
    kubo_cmd->add_option("a", a_path)->required();

    auto* kubo_inv = app.add_subcommand("kubo-inverse", "Inverse Kubo transform");
    kubo_inv->add_option("rho", rho_path)->required();
    kubo_inv->add_option("v", v_path)->required();

    auto* tangent_cmd = app.add_subcommand("tangent", "Tangent vector from rho towards sigma");
    tangent_cmd->add_option("rho", rho_path)->required();
    tangent_cmd->add_option("sigma", sigma_path)->required();

    auto* transport_cmd = app.add_subcommand("transport", "Parallel transport of a tangent vector");
    transport_cmd->add_option("rho1", rho_path)->required();
    transport_cmd->add_option("rho2", sigma_path)->required();
    transport_cmd->add_option("v", v_path)->required();
    transport_cmd->add_option("--kind", kind, "m (mixture) or e (exponential)")
        ->required()
        ->check(CLI::IsMember({"m", "e"}));

    auto* potential_cmd = app.add_subcommand("potential", "Potential value and contact state");
    potential_cmd->add_option("rho", rho_path)->required();
    potential_cmd->add_option("a", a_path)->required();

    auto* metric_cmd = app.add_subcommand("metric-tensor", "Metric tensor in the Gell-Mann basis");
    metric_cmd->add_option("rho", rho_path)->required();

    auto* coords_cmd = app.add_subcommand("coords", "Affine coordinates in the Gell-Mann basis");
    coords_cmd->add_option("sigma", sigma_path)->required();

    auto* random_cmd = app.add_subcommand("random", "Seeded random density matrix");
    random_cmd->add_option("--n", n, "Dimension")->required();
    random_cmd->add_option("--seed", seed, "Seed");

    auto* selftest = app.add_subcommand("selftest", "Run the verification suite");
    selftest->add_option("--n", n_list, "Dimensions")->delimiter(',');
    selftest->add_option("--samples", samples, "Samples per check");
    selftest->add_option("--seed", seed, "Master seed");
    selftest->add_flag("--json", as_json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.get_name() << ": " << e.what() << "\n";
        return kExitParse;
    }

    try {
        Cli cli;
        cli.tol = validation_tolerance();

        if (*divergence) {
            DensityMatrix rho = cli.load_density(rho_path);
            DensityMatrix sigma = cli.load_density(sigma_path);
            std::cout << format_scalar(relative_entropy(rho, sigma)) << "\n";
        } else if (*arc) {
            if (!*t_opt && !*grid_opt)
                throw ParseError("arc: exactly one of --t or --grid is required");
            ExponentialArc curve(cli.load_density(rho_path), cli.load_density(sigma_path));
            if (*t_opt) {
                emit(arc_point_json(curve, t_value));
            } else {
                if (grid < 1) throw ParseError("arc: --grid must be at least 1");
                json out = json::array();
                for (int k = 0; k <= grid; ++k)
                    out.push_back(arc_point_json(curve, static_cast<double>(k) / grid));
                emit(out);
            }
        } else if (*chart_cmd) {
            CenteredObservable a =
                chart(cli.load_density(rho_path), cli.load_density(sigma_path));
            emit(matrix_to_json(a.matrix()));
        } else if (*chart_inv) {
            emit(matrix_to_json(chart_inverse(cli.load_centered(rho_path, a_path)).matrix()));
        } else if (*kubo_cmd) {
            DensityMatrix rho = cli.load_density(rho_path);
            emit(matrix_to_json(kubo(rho, cli.load_hermitian(a_path))));
        } else if (*kubo_inv) {
            DensityMatrix rho = cli.load_density(rho_path);
            emit(matrix_to_json(kubo_inverse(rho, cli.load_hermitian(v_path))));
        } else if (*tangent_cmd) {
            TangentVector y =
                tangent(cli.load_density(rho_path), cli.load_density(sigma_path));
            emit(matrix_to_json(y.matrix()));
        } else if (*transport_cmd) {
            DensityMatrix rho1 = cli.load_density(rho_path);
            DensityMatrix rho2 = cli.load_density(sigma_path);
            TangentVector v(cli.load_hermitian(v_path));
            const TransportKind which =
                kind == "m" ? TransportKind::Mixture : TransportKind::Exponential;
            emit(matrix_to_json(transport(which, rho1, rho2, v).matrix()));
        } else if (*potential_cmd) {
            PotentialEvaluation eval = potential(cli.load_centered(rho_path, a_path));
            emit(json{{"value", eval.value}, {"contact", matrix_to_json(eval.contact.matrix())}});
        } else if (*metric_cmd) {
            DensityMatrix rho = cli.load_density(rho_path);
            MetricTensor g = metric_tensor(rho, gellmann_basis(rho.dim()));
            json rows = json::array();
            for (Eigen::Index i = 0; i < g.entries().rows(); ++i) {
                json row = json::array();
                for (Eigen::Index j = 0; j < g.entries().cols(); ++j)
                    row.push_back(g.entries()(i, j));
                rows.push_back(std::move(row));
            }
            emit(json{{"n", rho.dim()}, {"entries", std::move(rows)}});
        } else if (*coords_cmd) {
            DensityMatrix sigma = cli.load_density(sigma_path);
            RealVector x = affine_coords(sigma, gellmann_basis(sigma.dim()));
            json values = json::array();
            for (Eigen::Index i = 0; i < x.size(); ++i) values.push_back(x(i));
            emit(json{{"n", sigma.dim()}, {"coords", std::move(values)}});
        } else if (*random_cmd) {
            emit(matrix_to_json(random_density(n, seed).matrix()));
        } else if (*selftest) {
            return run_selftest(n_list, samples, seed, as_json);
        }
        return kExitOk;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const TraceNotOne& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const Degenerate& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const NotHermitian& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitContract;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitContract;
    }
}
