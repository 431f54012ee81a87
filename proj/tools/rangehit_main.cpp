// Command-line surface: solve / greedy / epsnet / gen / verify over instance
// documents, with deterministic seeded sweeps and exact results.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rangehit/gen.hpp"
#include "rangehit/hardness.hpp"
#include "rangehit/io.hpp"
#include "rangehit/report.hpp"
#include "rangehit/structure.hpp"
#include "rangehit/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace rangehit;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

Json int_list(const std::vector<int>& v) { return Json(v); }

Json rational_list(const std::vector<Rational>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(to_string(x));
    return arr;
}

Json matching_json(const MatchingResult& m) {
    return Json{{"value", m.value}, {"witness", int_list(m.witness)}};
}

Json hitting_json(const HittingSetResult& t) {
    return Json{{"value", t.value}, {"witness", int_list(t.witness)}};
}

Json fractional_json(const FractionalSolution& f) {
    return Json{{"objective", to_string(f.objective)}, {"weights", rational_list(f.weights)}};
}

Json instance_summary(const InstanceDocument& doc, const BuildResult& built) {
    Json j{{"kind", doc.kind},
           {"numVertices", built.hypergraph.num_vertices},
           {"numEdges", built.hypergraph.num_edges()},
           {"emptyTracesDropped", built.empty_traces_dropped}};
    if (doc.geometric) {
        j["dim"] = doc.geometric->dim;
        j["numPoints"] = static_cast<int>(doc.geometric->points.size());
        j["numRanges"] = static_cast<int>(doc.geometric->ranges.size());
    }
    return j;
}

const char* outcome_name(RunOutcome o) {
    switch (o) {
        case RunOutcome::Success: return "success";
        case RunOutcome::InputError: return "input-error";
        case RunOutcome::BudgetExhausted: return "budget-exhausted";
        case RunOutcome::Finding: return "finding";
    }
    return "input-error";
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

struct CsvWriter {
    std::ofstream out;
    explicit CsvWriter(const std::string& path) {
        if (path.empty()) return;
        out.open(path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + path);
    }
    void row(const std::string& line) {
        if (out.is_open()) out << line << "\n";
    }
};

// ---------------------------------------------------------------- solve ----

RunOutcome run_solve(const std::string& file, const std::string& what, long long budget,
                     const std::string& out_path) {
    Timer timer;
    const std::string text = read_file(file);
    const InstanceDocument doc = parse_instance(text);
    const BuildResult built = hypergraph_of(doc);
    const Hypergraph& h = built.hypergraph;

    Json results;
    RunOutcome outcome = RunOutcome::Success;
    const bool all = what == "all";
    if (all || what == "nu") results["nu"] = matching_json(nu_exact(h, budget));
    if (all || what == "nustar") results["nuStar"] = fractional_json(nu_star(h));
    if (all || what == "taustar") results["tauStar"] = fractional_json(tau_star(h));
    if (all || what == "tau") results["tau"] = hitting_json(tau_exact(h, budget));
    if (all) {
        const Rational ns = parse_rational(results["nuStar"]["objective"].get<std::string>());
        const Rational ts = parse_rational(results["tauStar"]["objective"].get<std::string>());
        const bool star_equal = ns == ts;
        const bool chain = star_equal && Rational(results["nu"]["value"].get<int>()) <= ns &&
                           ts <= Rational(results["tau"]["value"].get<int>());
        results["starEqual"] = star_equal;
        results["chainHolds"] = chain;
        if (!chain) outcome = RunOutcome::Finding;
    }

    Json report{{"command", "solve"},
                {"what", what},
                {"budget", budget},
                {"inputDigest", digest_hex(text)},
                {"instance", instance_summary(doc, built)},
                {"results", results},
                {"outcome", outcome_name(outcome)},
                {"timingMs", timer.ms()}};
    write_output(out_path, report.dump(2) + "\n");
    return outcome;
}

// --------------------------------------------------------------- greedy ----

RunOutcome run_greedy(const std::string& file, long long budget, const std::string& out_path) {
    Timer timer;
    const std::string text = read_file(file);
    const InstanceDocument doc = parse_instance(text);
    const BuildResult built = hypergraph_of(doc);
    const Hypergraph& h = built.hypergraph;

    GreedyOptions opts;
    opts.node_budget = budget;

    Json results;
    RunOutcome outcome = RunOutcome::Success;
    if (h.num_edges() == 0) {
        results["matchingSize"] = 0;
        results["chosen"] = Json::array();
        results["classes"] = Json::array();
        results["hittingSet"] = hitting_json({});
    } else {
        const Decomposition d = greedy_matching(h, opts);
        const ClassCoverDetail cover = hitting_from_decomposition_detailed(h, d, opts);

        std::vector<char> seen(h.num_edges(), 0);
        bool partition = true;
        for (const auto& cls : d.classes)
            for (int e : cls) {
                if (seen[e]) partition = false;
                seen[e] = 1;
            }
        for (char s : seen) partition = partition && s;

        results["matchingSize"] = static_cast<int>(d.chosen.size());
        results["chosen"] = int_list(d.chosen);
        Json classes = Json::array();
        for (std::size_t i = 0; i < d.classes.size(); ++i)
            classes.push_back(Json{{"chosen", d.chosen[i]},
                                   {"edges", int_list(d.classes[i])},
                                   {"hittingSet", hitting_json(cover.per_class[i])},
                                   {"exact", static_cast<bool>(cover.exact[i])}});
        results["classes"] = std::move(classes);
        results["hittingSet"] = hitting_json(cover.combined);
        results["partitionValid"] = partition;

        try {
            const MatchingResult nu = nu_exact(h, budget);
            results["nu"] = matching_json(nu);
            const bool bound = 156LL * static_cast<long long>(d.chosen.size()) >= nu.value;
            results["boundHolds"] = bound;
            const bool guaranteed_family = doc.kind == "geometric";
            if ((!bound && guaranteed_family) || !partition) outcome = RunOutcome::Finding;
        } catch (const BudgetExceededError&) {
            results["nu"] = nullptr;  // ratio check skipped: exact solver gave up
        }
    }

    Json report{{"command", "greedy"},
                {"budget", budget},
                {"inputDigest", digest_hex(text)},
                {"instance", instance_summary(doc, built)},
                {"results", results},
                {"outcome", outcome_name(outcome)},
                {"timingMs", timer.ms()}};
    write_output(out_path, report.dump(2) + "\n");
    return outcome;
}

// --------------------------------------------------------------- epsnet ----

RunOutcome run_epsnet(const std::string& file, const std::string& eps_text, long long budget,
                      const std::string& out_path) {
    Timer timer;
    const std::string text = read_file(file);
    const InstanceDocument doc = parse_instance(text);
    if (doc.kind != "geometric") throw std::invalid_argument("epsnet needs a geometric instance");
    const BuildResult built = hypergraph_of(doc);
    const Hypergraph& h = built.hypergraph;
    const Rational eps = parse_rational(eps_text);
    const int total_points = static_cast<int>(doc.geometric->points.size());

    GreedyOptions opts;
    opts.node_budget = budget;
    const std::vector<int> net = epsilon_net(h, total_points, eps, opts);

    const Rational threshold = eps * Rational(total_points);
    int heavy = 0, hit = 0;
    for (const auto& e : h.edges) {
        if (Rational(static_cast<int>(e.size())) < threshold) continue;
        ++heavy;
        for (int v : e)
            if (std::find(net.begin(), net.end(), v) != net.end()) {
                ++hit;
                break;
            }
    }
    const bool all_hit = heavy == hit;

    Json results{{"eps", to_string(eps)},
                 {"threshold", to_string(threshold)},
                 {"net", int_list(net)},
                 {"netSize", static_cast<int>(net.size())},
                 {"heavyEdges", heavy},
                 {"heavyEdgesHit", hit},
                 {"allHeavyEdgesHit", all_hit}};
    const RunOutcome outcome = all_hit ? RunOutcome::Success : RunOutcome::Finding;

    Json report{{"command", "epsnet"},
                {"budget", budget},
                {"inputDigest", digest_hex(text)},
                {"instance", instance_summary(doc, built)},
                {"results", results},
                {"outcome", outcome_name(outcome)},
                {"timingMs", timer.ms()}};
    write_output(out_path, report.dump(2) + "\n");
    return outcome;
}

// ------------------------------------------------------------------ gen ----

RangeFamily parse_family(const std::string& name) {
    if (name == "halfplane") return RangeFamily::HalfPlane;
    if (name == "disc") return RangeFamily::Disc;
    if (name == "halfspace") return RangeFamily::HalfSpace;
    throw std::invalid_argument("family must be halfplane, disc, or halfspace");
}

RunOutcome run_gen(const std::string& kind, int n, int dim, const std::string& family_name,
                   int points, int ranges, std::uint64_t seed, const std::string& out_path) {
    InstanceDocument doc;
    if (kind == "hard-r4") {
        if (n < 2) throw std::invalid_argument("hard-r4 needs --n >= 2");
        doc = document_from_geometric(hard_instance_r4(n));
    } else if (kind == "star") {
        if (n < 2) throw std::invalid_argument("star needs --n >= 2");
        const BoundedDegreeHypergraph star = star_hypergraph(n);
        doc = document_from_abstract(star.base.num_vertices, star.base.edges);
    } else if (kind == "fano") {
        const Hypergraph fano = gen_fano();
        doc = document_from_abstract(fano.num_vertices, fano.edges);
    } else if (kind == "random") {
        if (family_name.empty()) throw std::invalid_argument("random needs --family");
        const RangeFamily family = parse_family(family_name);
        if (dim != 0 && dim != family_dim(family))
            throw std::invalid_argument("--dim inconsistent with --family");
        if (points < 1 || ranges < 0) throw std::invalid_argument("random needs --points >= 1, --ranges >= 0");
        doc = document_from_geometric(gen_random_instance(family, points, ranges, seed));
    } else {
        throw std::invalid_argument("gen kind must be hard-r4, random, fano, or star");
    }
    write_output(out_path, serialize_instance(doc));
    return RunOutcome::Success;
}

// ---------------------------------------------------------------- verify ----

RunOutcome run_verify_duality(const std::string& file, int trials, std::uint64_t seed,
                              long long budget, const std::string& csv_path, Json& report) {
    CsvWriter csv(csv_path);
    csv.row("trial,family,numEdges,nu,nuStar,tau,chainHolds");
    Json results;
    if (!file.empty()) {
        const std::string text = read_file(file);
        const InstanceDocument doc = parse_instance(text);
        const BuildResult built = hypergraph_of(doc);
        report["inputDigest"] = digest_hex(text);
        report["instance"] = instance_summary(doc, built);
        const DualityReport r = check_duality_chain(built.hypergraph, budget);
        results["nu"] = matching_json(r.nu);
        results["nuStar"] = fractional_json(r.nu_star_sol);
        results["tauStar"] = fractional_json(r.tau_star_sol);
        results["tau"] = hitting_json(r.tau);
        results["starEqual"] = r.star_equal;
        results["chainHolds"] = r.chain_holds;
        csv.row("0,file," + std::to_string(built.hypergraph.num_edges()) + "," +
                std::to_string(r.nu.value) + "," + to_string(r.nu_star_sol.objective) + "," +
                std::to_string(r.tau.value) + "," + (r.chain_holds ? "1" : "0"));
        report["results"] = results;
        return r.chain_holds ? RunOutcome::Success : RunOutcome::Finding;
    }

    if (trials < 1) throw std::invalid_argument("verify duality needs a file or --trials >= 1");
    static const char* kFamilyName[3] = {"halfplane", "disc", "halfspace"};
    int held = 0;
    RunOutcome outcome = RunOutcome::Success;
    for (int t = 0; t < trials; ++t) {
        const GeometricInstance instance = gen_sweep_instance(seed, t);
        const Hypergraph h = build_hypergraph(instance).hypergraph;
        const DualityReport r = check_duality_chain(h, budget);
        held += r.chain_holds;
        csv.row(std::to_string(t) + "," + kFamilyName[t % 3] + "," + std::to_string(h.num_edges()) +
                "," + std::to_string(r.nu.value) + "," + to_string(r.nu_star_sol.objective) + "," +
                std::to_string(r.tau.value) + "," + (r.chain_holds ? "1" : "0"));
        if (!r.chain_holds && outcome == RunOutcome::Success) {
            outcome = RunOutcome::Finding;
            results["counterexample"] =
                Json::parse(serialize_instance(document_from_geometric(instance)));
            results["counterexampleTrial"] = t;
        }
    }
    results["trials"] = trials;
    results["chainHeld"] = held;
    report["results"] = results;
    return outcome;
}

RunOutcome run_verify_planarity(const std::string& file, int trials, std::uint64_t seed,
                                const std::string& family_name, bool random_matching,
                                long long budget, const std::string& csv_path, Json& report) {
    CsvWriter csv(csv_path);
    csv.row("trial,matchingSize,adjacency,planar,certificateVerified");
    Json results;
    auto run_one = [&](const GeometricInstance& instance, int trial) {
        std::optional<std::vector<int>> override;
        if (random_matching) {
            const Hypergraph h = build_hypergraph(instance).hypergraph;
            override = random_maximal_matching(h, seed ^ (0xA076F5C1ULL + static_cast<std::uint64_t>(trial)));
        }
        PlanarityPropertyReport r = check_planarity_property(instance, override, budget);
        csv.row(std::to_string(trial) + "," + std::to_string(r.matching.size()) + "," +
                std::to_string(r.two_graph.adjacency.size()) + "," + (r.planar ? "1" : "0") + "," +
                (r.certificate_verified ? "1" : "0"));
        return r;
    };

    if (!file.empty()) {
        const std::string text = read_file(file);
        const InstanceDocument doc = parse_instance(text);
        if (doc.kind != "geometric") throw std::invalid_argument("planarity needs a geometric instance");
        report["inputDigest"] = digest_hex(text);
        const PlanarityPropertyReport r = run_one(*doc.geometric, 0);
        results["matching"] = int_list(r.matching);
        results["adjacency"] = static_cast<int>(r.two_graph.adjacency.size());
        results["planar"] = r.planar;
        results["certificateVerified"] = r.certificate_verified;
        report["results"] = results;
        return r.planar && r.certificate_verified ? RunOutcome::Success : RunOutcome::Finding;
    }

    if (trials < 1) throw std::invalid_argument("verify planarity needs a file or --trials >= 1");
    const RangeFamily family = parse_family(family_name.empty() ? "disc" : family_name);
    int planar_count = 0;
    RunOutcome outcome = RunOutcome::Success;
    for (int t = 0; t < trials; ++t) {
        const GeometricInstance instance = gen_sweep_instance(family, seed, t);
        const PlanarityPropertyReport r = run_one(instance, t);
        planar_count += r.planar && r.certificate_verified;
        if ((!r.planar || !r.certificate_verified) && outcome == RunOutcome::Success) {
            outcome = RunOutcome::Finding;
            results["counterexample"] =
                Json::parse(serialize_instance(document_from_geometric(instance)));
            results["counterexampleTrial"] = t;
        }
    }
    results["trials"] = trials;
    results["planar"] = planar_count;
    report["results"] = results;
    return outcome;
}

RunOutcome run_verify_k33(int trials, std::uint64_t seed, const std::string& csv_path, Json& report) {
    if (trials < 1) throw std::invalid_argument("verify k33 needs --trials >= 1");
    CsvWriter csv(csv_path);
    csv.row("trial,feasiblePairs,allNine");
    Json results;
    RunOutcome outcome = RunOutcome::Success;
    int max_feasible = 0;
    for (int t = 0; t < trials; ++t) {
        const std::vector<Point> pts =
            gen_general_position_points(seed ^ (0xC2B2AE3D27D4EB4FULL * (static_cast<std::uint64_t>(t) + 1)));
        const K33SeparationReport r = check_k33_separations(pts);
        max_feasible = std::max(max_feasible, static_cast<int>(r.feasible_pairs.size()));
        csv.row(std::to_string(t) + "," + std::to_string(r.feasible_pairs.size()) + "," +
                (r.all_nine ? "1" : "0"));
        if (r.all_nine && outcome == RunOutcome::Success) {
            outcome = RunOutcome::Finding;
            Json coords = Json::array();
            for (const Point& p : pts) coords.push_back(rational_list(p.coords));
            results["counterexample"] = coords;
            results["counterexampleTrial"] = t;
        }
    }
    results["trials"] = trials;
    results["allNineSeen"] = outcome == RunOutcome::Finding;
    results["maxFeasiblePairs"] = max_feasible;
    report["results"] = results;
    return outcome;
}

RunOutcome run_verify_embedding(const std::string& file, int n, Json& report) {
    Json results;
    GeometricInstance instance;
    int expected_n = n;
    if (!file.empty()) {
        const std::string text = read_file(file);
        const InstanceDocument doc = parse_instance(text);
        if (doc.kind != "geometric") throw std::invalid_argument("embedding needs a geometric instance");
        report["inputDigest"] = digest_hex(text);
        instance = *doc.geometric;
        expected_n = static_cast<int>(instance.ranges.size());
    } else {
        if (n < 2) throw std::invalid_argument("verify embedding needs a file or --n >= 2");
        instance = hard_instance_r4(n);
    }

    const BoundedDegreeHypergraph expect = star_hypergraph(expected_n);
    const Hypergraph rebuilt = build_hypergraph(instance).hypergraph;
    const bool edges_match = rebuilt.edges == expect.base.edges &&
                             rebuilt.num_vertices == expect.base.num_vertices;

    // Exact incidence audit straight off the instance data.
    int checks = 0;
    bool no_boundary = true;
    for (const Range& r : instance.ranges) {
        const auto* hs = std::get_if<HalfSpace>(&r);
        if (hs == nullptr) throw std::invalid_argument("embedding instances carry half-spaces only");
        for (const Point& p : instance.points) {
            ++checks;
            if (dot(hs->normal, p.coords) == hs->offset) no_boundary = false;
        }
    }

    results["n"] = expected_n;
    results["dim"] = instance.dim;
    results["incidenceChecks"] = checks;
    results["edgesMatchStars"] = edges_match;
    results["noBoundaryIncidence"] = no_boundary;
    report["results"] = results;
    return edges_match && no_boundary ? RunOutcome::Success : RunOutcome::Finding;
}

RunOutcome run_verify(const std::string& kind, const std::string& file, int trials,
                      std::uint64_t seed, int n, const std::string& family, bool random_matching,
                      long long budget, const std::string& csv_path, const std::string& out_path) {
    Timer timer;
    Json report{{"command", "verify"}, {"kind", kind}, {"seed", seed}};
    RunOutcome outcome;
    if (kind == "duality")
        outcome = run_verify_duality(file, trials, seed, budget, csv_path, report);
    else if (kind == "planarity")
        outcome = run_verify_planarity(file, trials, seed, family, random_matching, budget, csv_path, report);
    else if (kind == "k33")
        outcome = run_verify_k33(trials, seed, csv_path, report);
    else if (kind == "embedding")
        outcome = run_verify_embedding(file, n, report);
    else
        throw std::invalid_argument("verify kind must be duality, planarity, k33, or embedding");
    report["outcome"] = outcome_name(outcome);
    report["timingMs"] = timer.ms();
    write_output(out_path, report.dump(2) + "\n");
    return outcome;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact matchings vs hitting sets over half-space and disc traces"};
    app.require_subcommand(1);

    std::string file, what = "all", out_path, eps_text, family, kind, csv_path;
    int n = 0, dim = 0, points = 0, ranges = 0, trials = 0;
    std::uint64_t seed = 1;
    long long budget = kDefaultNodeBudget;
    bool random_matching = false;

    CLI::App* solve = app.add_subcommand("solve", "exact nu, tau, nu*, tau* with witnesses");
    solve->add_option("file", file, "instance document")->required();
    solve->add_option("--what", what, "nu | tau | nustar | taustar | all")
        ->check(CLI::IsMember({"nu", "tau", "nustar", "taustar", "all"}));
    solve->add_option("--budget", budget, "search node budget");
    solve->add_option("-o,--out", out_path, "report file (default stdout)");

    CLI::App* greedy = app.add_subcommand("greedy", "greedy matching, decomposition, per-class covers");
    greedy->add_option("file", file, "instance document")->required();
    greedy->add_option("--budget", budget, "search node budget");
    greedy->add_option("-o,--out", out_path, "report file (default stdout)");

    CLI::App* epsnet = app.add_subcommand("epsnet", "hitting set for all heavy edges");
    epsnet->add_option("file", file, "instance document")->required();
    epsnet->add_option("--eps", eps_text, "fraction in (0,1], e.g. 1/5")->required();
    epsnet->add_option("--budget", budget, "search node budget");
    epsnet->add_option("-o,--out", out_path, "report file (default stdout)");

    CLI::App* gen = app.add_subcommand("gen", "emit an instance document");
    gen->add_option("kind", kind, "hard-r4 | random | fano | star")->required();
    gen->add_option("--n", n, "size parameter for hard-r4 / star");
    gen->add_option("--dim", dim, "2 or 3 (random; checked against --family)");
    gen->add_option("--family", family, "halfplane | disc | halfspace (random)");
    gen->add_option("--points", points, "point count (random)");
    gen->add_option("--ranges", ranges, "range count (random)");
    gen->add_option("--seed", seed, "generator seed (random)");
    gen->add_option("-o,--out", out_path, "instance file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "certificate sweeps and single-file checks");
    verify->add_option("kind", kind, "duality | planarity | k33 | embedding")->required();
    verify->add_option("file", file, "instance document (duality/planarity/embedding)");
    verify->add_option("--trials", trials, "sweep size");
    verify->add_option("--seed", seed, "sweep seed");
    verify->add_option("--n", n, "star size (embedding)");
    verify->add_option("--family", family, "sweep family (planarity; default disc)");
    verify->add_flag("--random-matching", random_matching, "use a seeded maximal matching instead of the optimum");
    verify->add_option("--budget", budget, "search node budget");
    verify->add_option("--csv", csv_path, "per-trial CSV output");
    verify->add_option("-o,--out", out_path, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_code(rangehit::RunOutcome::InputError);
    }

    try {
        if (budget < 1) throw std::invalid_argument("--budget must be >= 1");
        rangehit::RunOutcome outcome = rangehit::RunOutcome::InputError;
        if (solve->parsed())
            outcome = run_solve(file, what, budget, out_path);
        else if (greedy->parsed())
            outcome = run_greedy(file, budget, out_path);
        else if (epsnet->parsed())
            outcome = run_epsnet(file, eps_text, budget, out_path);
        else if (gen->parsed())
            outcome = run_gen(kind, n, dim, family, points, ranges, seed, out_path);
        else if (verify->parsed())
            outcome = run_verify(kind, file, trials, seed, n, family, random_matching, budget,
                                 csv_path, out_path);
        if (outcome == rangehit::RunOutcome::Finding)
            std::cerr << "finding: a verified outcome contradicts a proven statement; see the report\n";
        return exit_code(outcome);
    } catch (const rangehit::BudgetExceededError& e) {
        std::cerr << "budget exhausted: " << e.what() << " (" << e.nodes_explored << " nodes)\n";
        return exit_code(rangehit::RunOutcome::BudgetExhausted);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(rangehit::RunOutcome::InputError);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_code(rangehit::RunOutcome::InputError);
    }
}
