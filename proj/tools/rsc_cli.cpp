#include <CLI11.hpp>
#include <json.hpp>

#include <bit>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <tuple>

#include "rsc/enumeration.hpp"
#include "rsc/generators.hpp"
#include "rsc/maxent.hpp"
#include "rsc/measures.hpp"
#include "rsc/observables.hpp"
#include "rsc/serialize.hpp"
#include "rsc/stats.hpp"

namespace {

using namespace rsc;

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct ModelSpec {
    std::string model;
    int n = 0;
    int d = 1;
    std::string p_list;
    std::string pfile;
};

Model build_model(const ModelSpec& spec) {
    if (spec.model == "gnp" || spec.model == "flag" || spec.model == "lm") {
        auto ps = parse_double_list(spec.p_list);
        if (ps.size() != 1) throw CLI::ValidationError("--p: this model takes a single probability");
        if (spec.model == "gnp") return GnpModel{spec.n, ps[0]};
        if (spec.model == "flag") return FlagModel{spec.n, ps[0]};
        return LinialMeshulamModel{spec.n, spec.d, ps[0]};
    }
    if (spec.model == "kahle") {
        auto ps = parse_double_list(spec.p_list);
        return KahleModel{KahleParams(spec.n, std::move(ps))};
    }
    if (spec.model == "general") {
        if (spec.pfile.empty()) throw CLI::ValidationError("--pfile required for the general model");
        auto params = general_params_from_json(read_file(spec.pfile));
        if (spec.n != 0 && spec.n != params.n)
            throw CLI::ValidationError("--n disagrees with the parameter file");
        return GeneralModel{std::move(params)};
    }
    throw CLI::ValidationError("unknown model: " + spec.model);
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("cannot open output: " + path);
    return file;
}

int cmd_sample(const ModelSpec& spec, long long count, std::optional<std::uint64_t> seed,
               const std::string& out_path) {
    Model model = build_model(spec);
    std::uint64_t s = seed ? *seed : std::random_device{}();
    std::ofstream file;
    auto& out = open_output(file, out_path);
    for (long long i = 0; i < count; ++i) {
        auto c = model_sample(model, RngState{s, static_cast<std::uint64_t>(i)});
        out << to_canonical_json(c) << "\n";
    }
    return 0;
}

int cmd_stats(const ModelSpec& spec, long long count, std::uint64_t seed, const std::string& out_path) {
    Model model = build_model(spec);
    std::ofstream file;
    auto& out = open_output(file, out_path);
    if (spec.model == "kahle") {
        KahleParams params = std::get<KahleModel>(model).params;
        int n = params.n;
        std::vector<double> f_sum(n, 0.0), f_sq(n, 0.0), phi_sum(n, 0.0), phi_sq(n, 0.0);
        for (long long i = 0; i < count; ++i) {
            auto c = sample_kahle(params, RngState{seed, static_cast<std::uint64_t>(i)});
            for (int d = 1; d < n; ++d) {
                double fd = static_cast<double>(c.f(d));
                double pd = static_cast<double>(c.phi(d));
                f_sum[d] += fd;
                f_sq[d] += fd * fd;
                phi_sum[d] += pd;
                phi_sq[d] += pd * pd;
            }
        }
        out << "d,f_mean_mc,f_expected,phi_mean_mc,phi_expected,z_score\n";
        for (int d = 1; d < n; ++d) {
            double fm = f_sum[d] / count;
            double pm = phi_sum[d] / count;
            double fe = expected_f(params, d);
            double pe = expected_phi(params, d);
            double var = (f_sq[d] / count - fm * fm) / count;
            double z = var > 0 ? (fm - fe) / std::sqrt(var) : 0.0;
            out << d << "," << fm << "," << fe << "," << pm << "," << pe << "," << z << "\n";
        }
        return 0;
    }
    if (spec.model == "general") {
        GeneralParams params = std::get<GeneralModel>(model).params;
        int n = params.n;
        std::uint64_t universe = (std::uint64_t{1} << n) - 1;
        std::vector<long long> a_count(universe + 1, 0), b_count(universe + 1, 0);
        for (long long i = 0; i < count; ++i) {
            auto c = sample_general_delta(params, RngState{seed, static_cast<std::uint64_t>(i)});
            for (std::uint64_t m = 1; m <= universe; ++m) {
                a_count[m] += c.a_value(m);
                b_count[m] += c.b_value(m);
            }
        }
        out << "simplex,a_mc,a_expected,z_a,b_mc,b_expected,z_b\n";
        for (std::uint64_t m = 1; m <= universe; ++m) {
            Simplex s(m);
            double am = static_cast<double>(a_count[m]) / count;
            double bm = static_cast<double>(b_count[m]) / count;
            double ae = expected_a(s, params);
            double be = expected_b(s, params);
            auto z = [&](double mc, double e) {
                double se = std::sqrt(std::max(e * (1.0 - e), 1e-300) / count);
                return (mc - e) / se;
            };
            std::string name;
            for (int v : s.vertices()) name += std::to_string(v) + " ";
            name.pop_back();
            out << "\"" << name << "\"," << am << "," << ae << "," << z(am, ae) << "," << bm << ","
                << be << "," << z(bm, be) << "\n";
        }
        return 0;
    }
    throw CLI::ValidationError("stats: supported models are kahle and general");
}

SpaceKind parse_space_kind(const std::string& s) {
    if (s == "cn") return SpaceKind::FullVertexSet;
    if (s == "cle") return SpaceKind::AnyVertexSubset;
    if (s == "graphs") return SpaceKind::Graphs;
    if (s == "flag") return SpaceKind::FlagOnly;
    if (s == "lm") return SpaceKind::LinialMeshulam;
    throw CLI::ValidationError("unknown space: " + s);
}

int cmd_enumerate(const std::string& kind, int n, int d, const std::string& out_path) {
    auto space = enumerate_space(parse_space_kind(kind), n, d);
    std::ofstream file;
    auto& out = open_output(file, out_path);
    for (const auto& c : space.members) out << to_canonical_json(c) << "\n";
    return 0;
}

int cmd_dist(const ModelSpec& spec, const std::string& kind, int n, int d, const std::string& out_path) {
    Model model = build_model(spec);
    auto space = std::make_shared<ComplexSpace>(enumerate_space(parse_space_kind(kind), n, d));
    auto dist = exact_distribution(model, space);
    std::ofstream file;
    auto& out = open_output(file, out_path);
    for (std::size_t i = 0; i < space->members.size(); ++i) {
        auto line = nlohmann::json::parse(to_canonical_json(space->members[i]));
        line["prob"] = dist.probs[i];
        out << line.dump() << "\n";
    }
    return 0;
}

int cmd_fit(const std::string& space_file, const std::string& obs_spec, const std::string& targets_file,
            const std::string& out_path) {
    auto space = std::make_shared<ComplexSpace>();
    {
        std::ifstream in(space_file);
        if (!in) throw CLI::ValidationError("cannot open space file: " + space_file);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            space->members.push_back(from_canonical_json(line));
        }
        space->kind = SpaceKind::FullVertexSet;
        space->n = space->members.empty() ? 0 : space->members[0].ambient_n();
    }
    MaxEntProblem problem;
    problem.space = space;
    {
        std::stringstream ss(obs_spec);
        std::string tok;
        while (std::getline(ss, tok, ';')) problem.observables.push_back(parse_observable(tok));
    }
    // Accept an inline JSON array or a path to one.
    std::string targets_text =
        !targets_file.empty() && targets_file.front() == '[' ? targets_file : read_file(targets_file);
    problem.targets = nlohmann::json::parse(targets_text).get<std::vector<double>>();
    auto report = solve_theta(problem);
    nlohmann::json out{{"theta", report.theta},
                       {"gradient_norm", report.gradient_norm},
                       {"iterations", report.iterations},
                       {"achieved", report.achieved_expectations},
                       {"entropy", report.entropy}};
    std::ofstream file;
    open_output(file, out_path) << out.dump(2) << "\n";
    return 0;
}

struct Verifier {
    int failures = 0;
    void check(const std::string& name, double measured, double expected, double tol) {
        bool ok = std::abs(measured - expected) <= tol;
        std::cout << (ok ? "PASS" : "FAIL") << " " << name << ": measured " << measured
                  << ", expected " << expected << ", tolerance " << tol << "\n";
        if (!ok) ++failures;
    }
    void check_true(const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "PASS" : "FAIL") << " " << name << ": " << detail << "\n";
        if (!ok) ++failures;
    }
};

int cmd_verify(const std::string& suite, const std::vector<double>& p, std::uint64_t seed) {
    double p1 = p.size() > 0 ? p[0] : 0.4;
    double p2 = p.size() > 1 ? p[1] : 0.6;
    Verifier v;
    auto c3 = std::make_shared<ComplexSpace>(enumerate_space(SpaceKind::FullVertexSet, 3));

    if (suite == "a3" || suite == "all") {
        auto values = evaluate_observables({obs_f(1), obs_f(2), obs_phi(2)}, *c3);
        std::vector<double> theta{-std::log(p1 / (1 - p1)), -std::log(p2 / (1 - p2)), -std::log(1 - p2)};
        v.check("a3.partition_function", partition_function(theta, values),
                1.0 / std::pow(1.0 - p1, 3), 1e-12);
        MaxEntProblem prob;
        prob.space = c3;
        prob.observables = {obs_f(1), obs_f(2), obs_phi(2)};
        prob.targets = {3 * p1, p1 * p1 * p1 * p2, p1 * p1 * p1};
        auto rep = solve_theta(prob);
        v.check("a3.exp(-theta1)", std::exp(-rep.theta[0]), p1 / (1 - p1), 1e-8);
        v.check("a3.exp(-theta2)", std::exp(-rep.theta[1]), p2 / (1 - p2), 1e-8);
        v.check("a3.exp(-theta3)", std::exp(-rep.theta[2]), 1 - p2, 1e-8);
    }
    if (suite == "a4" || suite == "all") {
        auto tilde = tilde_distribution_n3(p1, p2, c3);
        double sum = 0.0;
        for (double q : tilde.probs) sum += q;
        v.check("a4.normalization", sum, 1.0, 1e-12);
        MaxEntProblem prob;
        prob.space = c3;
        prob.observables = {obs_f(1), obs_f(2)};
        prob.targets = {3 * p1, p1 * p1 * p1 * p2};
        solve_theta(prob);
        auto fit = gibbs_distribution(prob);
        double max_fit_gap = 0.0;
        for (std::size_t i = 0; i < fit.probs.size(); ++i)
            max_fit_gap = std::max(max_fit_gap, std::abs(fit.probs[i] - tilde.probs[i]));
        v.check("a4.fit_matches_closed_form", max_fit_gap, 0.0, 1e-8);
        auto delta = exact_distribution(KahleModel{KahleParams(3, {p1, p2})}, c3);
        double max_gap = 0.0;
        for (std::size_t i = 0; i < delta.probs.size(); ++i)
            max_gap = std::max(max_gap, std::abs(delta.probs[i] - tilde.probs[i]));
        v.check_true("a4.separation", max_gap > 1e-6,
                     "max pointwise gap " + std::to_string(max_gap) + " > 1e-6");
    }
    if (suite == "fig6" || suite == "all") {
        v.check_true("fig6.space_size", c3->members.size() == 9,
                     "|space| = " + std::to_string(c3->members.size()));
        std::map<std::tuple<long long, long long, long long>, int> mult;
        for (const auto& c : c3->members) mult[{c.f(1), c.f(2), c.phi(2)}]++;
        std::map<std::tuple<long long, long long, long long>, int> expected{
            {{0, 0, 0}, 1}, {{1, 0, 0}, 3}, {{2, 0, 0}, 3}, {{3, 0, 1}, 1}, {{3, 1, 1}, 1}};
        v.check_true("fig6.multiplicities", mult == expected, "observable triple multiset");
    }
    if (suite == "thm3" || suite == "all") {
        auto cle3 = std::make_shared<ComplexSpace>(enumerate_space(SpaceKind::AnyVertexSubset, 3));
        GeneralParams params(3, 0.5);
        RngState pr{seed, 999};
        for (std::uint64_t m = 1; m <= 7; ++m) params.p[m] = 0.2 + 0.6 * pr.next_double();
        MaxEntProblem prob;
        prob.space = cle3;
        for (std::uint64_t m = 1; m <= 7; ++m) prob.observables.push_back(obs_a(Simplex(m)));
        for (std::uint64_t m = 1; m <= 7; ++m)
            if (std::popcount(m) >= 2) prob.observables.push_back(obs_b(Simplex(m)));
        for (auto& o : prob.observables) {
            bool is_a = o.name[0] == 'a';
            std::vector<int> vs;
            std::stringstream ss(o.name.substr(2));
            std::string tok;
            while (std::getline(ss, tok, ',')) vs.push_back(std::stoi(tok));
            Simplex s = Simplex::from_vertices(vs);
            prob.targets.push_back(is_a ? expected_a(s, params) : expected_b(s, params));
        }
        solve_theta(prob);
        auto fit = gibbs_distribution(prob);
        auto exact = exact_distribution(GeneralModel{params}, cle3);
        double max_gap = 0.0;
        for (std::size_t i = 0; i < fit.probs.size(); ++i)
            max_gap = std::max(max_gap, std::abs(fit.probs[i] - exact.probs[i]));
        v.check("thm3.pointwise_gap", max_gap, 0.0, 1e-8);
    }
    if (suite == "lemma2" || suite == "all") {
        auto delta = exact_distribution(KahleModel{KahleParams(3, {p1, p2})}, c3);
        auto rep = verify_maxent(delta, {obs_f(1), obs_f(2), obs_phi(2)}, 1000, RngState{seed, 1});
        v.check_true("lemma2.dominance", rep.violations == 0 && rep.perturbations == 1000,
                     std::to_string(rep.violations) + " violations over " +
                         std::to_string(rep.perturbations) + " perturbations");
        auto rep2 = verify_maxent(delta, {obs_f(1), obs_f(2)}, 1000, RngState{seed, 2});
        v.check_true("lemma2.boundary_constraints_matter", rep2.violations > 0,
                     std::to_string(rep2.violations) + " entropy-increasing perturbations found");
    }
    return v.failures > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random simplicial complex ensembles: sampling, enumeration, max-entropy fitting"};
    app.require_subcommand(1);

    ModelSpec spec;
    long long count = 1;
    std::optional<std::uint64_t> seed_opt;
    std::uint64_t seed = 0;
    std::string out_path, space_kind = "cn", space_file, obs_spec, targets_file, suite = "all";
    int n = 3, d = 1;

    auto add_model_opts = [&](CLI::App* cmd, bool need_seed) {
        cmd->add_option("--model", spec.model, "gnp | flag | lm | kahle | general")->required();
        cmd->add_option("--n", spec.n, "vertex count");
        cmd->add_option("--d", spec.d, "skeleton dimension (lm)");
        cmd->add_option("--p", spec.p_list, "probability or comma list (kahle)");
        cmd->add_option("--pfile", spec.pfile, "per-simplex parameter JSON (general)");
        cmd->add_option("--count", count, "number of samples");
        cmd->add_option("--out", out_path, "output path (default stdout)");
        if (need_seed)
            cmd->add_option("--seed", seed, "RNG seed")->required();
        else
            cmd->add_option("--seed", seed_opt, "RNG seed (default: entropy)");
    };

    auto* c_sample = app.add_subcommand("sample", "stream sampled complexes as JSON lines");
    add_model_opts(c_sample, false);

    auto* c_stats = app.add_subcommand("stats", "Monte Carlo moments vs closed forms, CSV");
    add_model_opts(c_stats, true);

    auto* c_enum = app.add_subcommand("enumerate", "write an enumerated space as JSON lines");
    c_enum->add_option("--space", space_kind, "cn | cle | graphs | flag | lm")->required();
    c_enum->add_option("--n", n)->required();
    c_enum->add_option("--d", d);
    c_enum->add_option("--out", out_path);

    auto* c_dist = app.add_subcommand("dist", "exact distribution over an enumerated space");
    c_dist->add_option("--model", spec.model)->required();
    c_dist->add_option("--n", spec.n);
    c_dist->add_option("--d", spec.d);
    c_dist->add_option("--p", spec.p_list);
    c_dist->add_option("--pfile", spec.pfile);
    c_dist->add_option("--space", space_kind)->required();
    c_dist->add_option("--space-n", n)->required();
    c_dist->add_option("--space-d", d);
    c_dist->add_option("--out", out_path);

    auto* c_fit = app.add_subcommand("fit", "fit Lagrange multipliers from targets");
    c_fit->add_option("--space-file", space_file, "JSON-lines space")->required();
    c_fit->add_option("--observables", obs_spec, "semicolon list, e.g. f_1;f_2;phi_2")->required();
    c_fit->add_option("--targets", targets_file, "JSON array of target expectations")->required();
    c_fit->add_option("--out", out_path);

    auto* c_verify = app.add_subcommand("verify", "run closed-form property suites");
    c_verify->add_option("--suite", suite, "a3 | a4 | fig6 | thm3 | lemma2 | all");
    c_verify->add_option("--p", spec.p_list, "parameters, e.g. 0.4,0.6");
    c_verify->add_option("--seed", seed, "RNG seed (required for reproducibility)")->required();

    try {
        app.parse(argc, argv);
        if (c_sample->parsed()) return cmd_sample(spec, count, seed_opt, out_path);
        if (c_stats->parsed()) return cmd_stats(spec, count, seed, out_path);
        if (c_enum->parsed()) return cmd_enumerate(space_kind, n, d, out_path);
        if (c_dist->parsed()) return cmd_dist(spec, space_kind, n, d, out_path);
        if (c_fit->parsed()) return cmd_fit(space_file, obs_spec, targets_file, out_path);
        if (c_verify->parsed()) {
            auto ps = spec.p_list.empty() ? std::vector<double>{} : parse_double_list(spec.p_list);
            return cmd_verify(suite, ps, seed);
        }
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
