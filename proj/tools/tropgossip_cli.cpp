// Command-line front end: exact tropical matrix algebra, the ordinary and
// lossy gossip monoids, the polyhedral fan pipeline, tropicalized group
// checks and detour-graph realizations.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "tropgossip/io.hpp"
#include "tropgossip/reproduce.hpp"

using namespace tropgossip;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TropMatrix read_matrix(const std::string& path) {
    std::string text = read_input(path);
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return matrix_from_json(json::parse(text));
    return parse_matrix_text(text);
}

void emit(const std::string& output, const std::string& payload) {
    if (output.empty() || output == "-") {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot write " + output);
    out << payload;
}

struct CommonOpts {
    std::string format = "text";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool csv_ok = false) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember(csv_ok ? std::vector<std::string>{"text", "json", "csv"}
                                     : std::vector<std::string>{"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--output,-o", opts.output, "output path (default: stdout)");
}

std::vector<std::pair<int, int>> parse_edges(const std::string& spec) {
    // "1-2,2-3" with 1-based endpoints
    std::vector<std::pair<int, int>> edges;
    std::istringstream is(spec);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) throw std::runtime_error("bad edge: " + item);
        int u = std::stoi(item.substr(0, dash)), v = std::stoi(item.substr(dash + 1));
        edges.push_back({u - 1, v - 1});
    }
    return edges;
}

json call_sequence_to_json(const CallSequence& s) {
    json calls = json::array();
    for (const Call& c : s.calls) calls.push_back({c.k + 1, c.l + 1, to_string(c.w)});
    return json{{"n", s.n}, {"calls", std::move(calls)}};
}

CallSequence call_sequence_from_json(const json& j) {
    CallSequence s;
    s.n = j.at("n").get<int>();
    for (const auto& c : j.at("calls"))
        s.push(c.at(0).get<int>() - 1, c.at(1).get<int>() - 1,
               parse_trop(c.at(2).get<std::string>()));
    return s;
}

std::string fan_summary_text(const GossipFan& fan) {
    std::ostringstream os;
    os << "n = " << fan.n << "\n";
    os << "maximal cones: " << fan.maximal.size() << "\n";
    os << "is fan: " << (fan.check.is_fan ? "yes" : "NO") << "\n";
    os << "pure of dimension " << fan.n * (fan.n - 1) / 2 << ": " << (fan.is_pure ? "yes" : "NO")
       << "\n";
    os << "connected in codimension 1: " << (fan.codim1_connected_flag ? "yes" : "NO") << "\n";
    os << "metric cone span present: " << (fan.metric_cone_present ? "yes" : "NO") << "\n";
    os << "f-vector:";
    for (size_t v : fan.check.f_vector) os << " " << v;
    os << "\n";
    return os.str();
}

json fan_summary_json(const GossipFan& fan) {
    json f = json::array();
    for (size_t v : fan.check.f_vector) f.push_back(v);
    return json{{"n", fan.n},
                {"maximal_cones", fan.maximal.size()},
                {"is_fan", fan.check.is_fan},
                {"pure", fan.is_pure},
                {"codim1_connected", fan.codim1_connected_flag},
                {"metric_cone_present", fan.metric_cone_present},
                {"f_vector", std::move(f)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "tropgossip: exact min-plus matrix algebra, gossip monoids and their polyhedral fans"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- tropmul ----
    {
        auto* cmd = app.add_subcommand("tropmul", "tropical product of two matrices");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("A", *a, "left matrix file (text or JSON, - for stdin)")->required();
        cmd->add_option("B", *b, "right matrix file")->required();
        add_common(cmd, *opts);
        cmd->callback([=] {
            TropMatrix p = trop_mat_mul(read_matrix(*a), read_matrix(*b));
            emit(opts->output,
                 opts->format == "json" ? matrix_to_json(p).dump(2) : matrix_to_text(p));
        });
    }

    // ---- kleene ----
    {
        auto* cmd = app.add_subcommand("kleene", "Kleene star (shortest-path closure)");
        auto a = std::make_shared<std::string>();
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("A", *a, "matrix file")->required();
        add_common(cmd, *opts);
        cmd->callback([=] {
            TropMatrix s = kleene_star(read_matrix(*a));
            emit(opts->output,
                 opts->format == "json" ? matrix_to_json(s).dump(2) : matrix_to_text(s));
        });
    }

    // ---- metric-check ----
    {
        auto* cmd = app.add_subcommand("metric-check", "membership in the closed metric cone");
        auto a = std::make_shared<std::string>();
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("A", *a, "matrix file")->required();
        add_common(cmd, *opts);
        cmd->callback([=] {
            TropMatrix m = read_matrix(*a);
            bool metric = is_metric(m);
            auto core = symmetric_core(m);
            if (opts->format == "json") {
                json corej = json::array();
                for (auto& [i, j] : core) corej.push_back({i + 1, j + 1});
                emit(opts->output, json{{"metric", metric},
                                        {"symmetric_core", corej},
                                        {"core_connected", pairs_connected(m.n(), core)}}
                                       .dump(2));
            } else {
                std::ostringstream os;
                os << (metric ? "metric" : "not metric") << "\n";
                os << "symmetric core:";
                for (auto& [i, j] : core) os << " {" << i + 1 << "," << j + 1 << "}";
                os << "\n";
                emit(opts->output, os.str());
            }
        });
    }

    // ---- core-witness ----
    {
        auto* cmd = app.add_subcommand("core-witness",
                                       "call sequence whose product has a prescribed symmetric core");
        auto n = std::make_shared<int>(0);
        auto edges = std::make_shared<std::string>();
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("--n", *n, "number of gossipers")->required();
        cmd->add_option("--edges", *edges, "connected edge list, e.g. 1-2,2-3")->required();
        add_common(cmd, *opts);
        cmd->callback([=] {
            CallSequence s = core_witness(*n, parse_edges(*edges));
            TropMatrix p = product(s);
            if (opts->format == "json") {
                json corej = json::array();
                for (auto& [i, j] : symmetric_core(p)) corej.push_back({i + 1, j + 1});
                emit(opts->output, json{{"calls", call_sequence_to_json(s)},
                                        {"product", matrix_to_json(p)},
                                        {"symmetric_core", corej}}
                                       .dump(2));
            } else {
                std::ostringstream os;
                os << "calls:";
                for (const Call& c : s.calls)
                    os << " {" << c.k + 1 << "," << c.l + 1 << ";" << to_string(c.w) << "}";
                os << "\nproduct:\n" << matrix_to_text(p);
                emit(opts->output, os.str());
            }
        });
    }

    // ---- irredundant ----
    {
        auto* cmd = app.add_subcommand("irredundant",
                                       "check whether dropping any call changes the product");
        auto file = std::make_shared<std::string>();
        auto buildw = std::make_shared<int>(0);
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("calls", *file, "call sequence JSON ({n, calls:[[k,l,w],...]}, 1-based)");
        cmd->add_option("--build-w", *buildw, "check the W_n construction instead");
        add_common(cmd, *opts);
        cmd->callback([=] {
            CallSequence s = *buildw > 0 ? build_W(*buildw)
                                         : call_sequence_from_json(json::parse(read_input(*file)));
            bool irr = is_irredundant(s);
            if (opts->format == "json")
                emit(opts->output, json{{"irredundant", irr},
                                        {"factors", s.calls.size()},
                                        {"calls", call_sequence_to_json(s)}}
                                       .dump(2));
            else
                emit(opts->output, std::string(irr ? "irredundant" : "redundant") + " (" +
                                       std::to_string(s.calls.size()) + " factors)");
        });
    }

    // ---- gossip-enum ----
    {
        auto* cmd = app.add_subcommand("gossip-enum",
                                       "enumerate the ordinary gossip monoid G_n({0,inf})");
        auto n = std::make_shared<int>(0);
        auto budget = std::make_shared<double>(8.0);
        auto allow_big = std::make_shared<bool>(false);
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("--n", *n, "number of gossipers (1..9)")->required();
        cmd->add_option("--memory-budget-gb", *budget, "abort when the walk exceeds this")
            ->capture_default_str();
        cmd->add_flag("--allow-big", *allow_big, "opt in to n = 8, 9");
        add_common(cmd, *opts, /*csv_ok=*/true);
        cmd->callback([=, &exit_code] {
            if (*n >= 8 && !*allow_big)
                throw CLI::ValidationError("gossip-enum",
                                           "n >= 8 needs --allow-big (hundreds of billions of states)");
            if (*n >= 7) {
                const double est[] = {0, 0, 0, 0, 0, 0, 0, 7, 4.0e3, 4.5e6};
                std::cerr << "estimated peak memory for n=" << *n << ": ~" << est[*n] << " GB\n";
            }
            EnumerationReport r = enumerate_monoid(*n, size_t(*budget * double(1 << 30)));
            if (!r.complete) exit_code = 3;
            if (opts->format == "json")
                emit(opts->output, enumeration_to_json(r).dump(2));
            else if (opts->format == "csv")
                emit(opts->output, enumeration_to_csv(r));
            else {
                std::ostringstream os;
                os << "n = " << r.n << (r.complete ? "" : "  [aborted on memory budget]") << "\n";
                os << "elements: " << r.total_count << "\n";
                os << "max length: " << r.max_length << "\n";
                os << "by length:";
                for (auto& [len, count] : r.length_histogram) os << " " << len << ":" << count;
                os << "\n";
                emit(opts->output, os.str());
            }
        });
    }

    // ---- pessimal ----
    {
        auto* cmd = app.add_subcommand("pessimal",
                                       "pessimal call chains (every call teaches someone)");
        auto n = std::make_shared<int>(0);
        auto search = std::make_shared<bool>(false);
        auto trials = std::make_shared<int>(100000);
        auto seed = std::make_shared<uint64_t>(0);
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("--n", *n, "number of gossipers")->required();
        cmd->add_flag("--search", *search, "also search for a longer pessimal chain");
        cmd->add_option("--trials", *trials, "random search attempts")->capture_default_str();
        cmd->add_option("--seed", *seed, "random seed (required with --search)");
        add_common(cmd, *opts);
        cmd->callback([=] {
            auto calls = construct_pessimal(*n);
            bool ok = verify_pessimal(*n, calls);
            bool longer_found = false;
            if (*search) {
                if (!cmd->count("--seed"))
                    throw CLI::ValidationError("pessimal", "--search requires --seed");
                Rng rng(*seed);
                long bound = binomial(*n, 2);
                for (int t = 0; t < *trials && !longer_found; ++t) {
                    std::vector<std::pair<int, int>> c;
                    for (long i = 0; i <= bound; ++i) {
                        int k = int(rand_below(rng, *n)), l = int(rand_below(rng, *n));
                        if (k == l) l = (l + 1) % *n;
                        c.push_back({std::min(k, l), std::max(k, l)});
                    }
                    longer_found = verify_pessimal(*n, c);
                }
            }
            if (opts->format == "json") {
                json cj = json::array();
                for (auto& [k, l] : calls) cj.push_back({k + 1, l + 1});
                json j{{"n", *n}, {"length", calls.size()}, {"pessimal", ok}, {"calls", cj}};
                if (*search) j["longer_chain_found"] = longer_found;
                emit(opts->output, j.dump(2));
            } else {
                std::ostringstream os;
                os << "chain of length " << calls.size() << (ok ? " (pessimal)" : " (NOT pessimal)")
                   << ":";
                for (auto& [k, l] : calls) os << " {" << k + 1 << "," << l + 1 << "}";
                os << "\n";
                if (*search)
                    os << (longer_found ? "found a longer pessimal chain (unexpected!)"
                                        : "no longer pessimal chain found")
                       << "\n";
                emit(opts->output, os.str());
            }
        });
    }

    // ---- fan / spans / orbits / fvector / closure-check ----
    {
        auto* cmd = app.add_subcommand("fan", "reconstruct the gossip fan for n = 2, 3, 4");
        auto n = std::make_shared<int>(0);
        auto emit_path = std::make_shared<std::string>();
        auto threads = std::make_shared<int>(0);
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("--n", *n, "number of gossipers (2..4)")->required();
        cmd->add_option("--emit", *emit_path, "write the maximal cones as JSON to this path");
        cmd->add_option("--threads", *threads, "worker threads (0 = all)")->capture_default_str();
        add_common(cmd, *opts);
        cmd->callback([=] {
            GossipFan fan = gossip_fan(*n, *threads);
            if (!emit_path->empty()) {
                json cones = json::array();
                for (const PolyCone& c : fan.maximal) cones.push_back(cone_to_json(c));
                std::ofstream out(*emit_path);
                out << json{{"n", *n}, {"cones", std::move(cones)}}.dump(2);
            }
            emit(opts->output, opts->format == "json" ? fan_summary_json(fan).dump(2)
                                                      : fan_summary_text(fan));
        });
    }
    {
        auto* cmd = app.add_subcommand("spans", "span census of full-dimensional image cones");
        auto n = std::make_shared<int>(0);
        auto threads = std::make_shared<int>(0);
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("--n", *n, "number of gossipers (2..4)")->required();
        cmd->add_option("--threads", *threads, "worker threads")->capture_default_str();
        add_common(cmd, *opts);
        cmd->callback([=] {
            SpanCensus c = enumerate_spans(*n, *n * (*n - 1) / 2, *threads);
            if (opts->format == "json") {
                json spans = json::array();
                for (auto& e : c.spans)
                    spans.push_back({{"span", subspace_to_json(e.span)},
                                     {"cones", e.cones.size()},
                                     {"has_maximal", e.maximal_index >= 0}});
                emit(opts->output, json{{"n", *n},
                                        {"span_count", c.spans.size()},
                                        {"schemes", c.schemes_total},
                                        {"spans", std::move(spans)}}
                                       .dump(2));
            } else {
                std::ostringstream os;
                os << "schemes: " << c.schemes_total << "\n";
                os << "spans of full-dimensional cones: " << c.spans.size() << "\n";
                emit(opts->output, os.str());
            }
        });
    }
    {
        auto* cmd = app.add_subcommand("orbits", "Sym(n)-orbits of the spans");
        auto n = std::make_shared<int>(0);
        auto transposed = std::make_shared<bool>(false);
        auto threads = std::make_shared<int>(0);
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("--n", *n, "number of gossipers (2..4)")->required();
        cmd->add_flag("--transpose", *transposed, "extend the group by matrix transposition");
        cmd->add_option("--threads", *threads, "worker threads")->capture_default_str();
        add_common(cmd, *opts);
        cmd->callback([=] {
            SpanCensus c = enumerate_spans(*n, *n * (*n - 1) / 2, *threads);
            std::vector<LinearSubspace> spans;
            for (auto& e : c.spans) spans.push_back(e.span);
            OrbitReport r = orbit_classify(spans, *n, *transposed);
            std::map<size_t, int> dist;
            for (size_t s : r.sizes) dist[s]++;
            if (opts->format == "json") {
                json sizes = json::array();
                for (size_t s : r.sizes) sizes.push_back(s);
                emit(opts->output, json{{"n", *n},
                                        {"transpose", *transposed},
                                        {"orbit_count", r.orbits.size()},
                                        {"sizes", std::move(sizes)}}
                                       .dump(2));
            } else {
                std::ostringstream os;
                os << r.orbits.size() << " orbits; size distribution:";
                for (auto& [s, k] : dist) os << " " << k << "x" << s;
                os << "\n";
                emit(opts->output, os.str());
            }
        });
    }
    {
        auto* cmd = app.add_subcommand("fvector", "f-vector of the gossip fan");
        auto n = std::make_shared<int>(0);
        auto threads = std::make_shared<int>(0);
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("--n", *n, "number of gossipers (2..4)")->required();
        cmd->add_option("--threads", *threads, "worker threads")->capture_default_str();
        add_common(cmd, *opts);
        cmd->callback([=] {
            GossipFan fan = gossip_fan(*n, *threads);
            if (opts->format == "json")
                emit(opts->output, fan_summary_json(fan).dump(2));
            else {
                std::ostringstream os;
                os << "f-vector:";
                for (size_t v : fan.check.f_vector) os << " " << v;
                os << "\n";
                emit(opts->output, os.str());
            }
        });
    }
    {
        auto* cmd = app.add_subcommand("closure-check",
                                       "sample products against the fan support");
        auto n = std::make_shared<int>(0);
        auto trials = std::make_shared<int>(10000);
        auto seed = std::make_shared<uint64_t>(0);
        auto threads = std::make_shared<int>(0);
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("--n", *n, "number of gossipers (2..4)")->required();
        cmd->add_option("--trials", *trials, "number of sampled products")->capture_default_str();
        cmd->add_option("--seed", *seed, "random seed")->required();
        cmd->add_option("--threads", *threads, "worker threads")->capture_default_str();
        add_common(cmd, *opts);
        cmd->callback([=] {
            GossipFan fan = gossip_fan(*n, *threads);
            ClosureReport r = closure_sample_check(fan, *trials, *seed);
            if (opts->format == "json")
                emit(opts->output,
                     json{{"n", *n}, {"trials", r.trials}, {"failures", r.failures}}.dump(2));
            else
                emit(opts->output, std::to_string(r.failures) + " failures in " +
                                       std::to_string(r.trials) + " trials");
        });
    }

    // ---- pq-check ----
    {
        auto* cmd = app.add_subcommand("pq-check",
                                       "the five-gossiper P/Q example: equal spans, non-convex union");
        auto seed = std::make_shared<uint64_t>(0);
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("--seed", *seed, "random seed for the witness search")->required();
        add_common(cmd, *opts);
        cmd->callback([=] {
            PqReport r = pq_example_check(*seed);
            if (opts->format == "json") {
                emit(opts->output,
                     json{{"spans_equal", r.spans_equal},
                          {"substitution_matches",
                           r.substitution_matches && r.transformed_system_matches},
                          {"intersection_dim", r.intersection_dim},
                          {"witness_found", r.witness_found},
                          {"p_point", zvec_to_json(r.p_point)},
                          {"q_point", zvec_to_json(r.q_point)},
                          {"p_matrix", matrix_to_json(pq_matrix(r.p_point))},
                          {"sum_matrix", matrix_to_json(pq_matrix(r.mid_point))}}
                         .dump(2));
            } else {
                std::ostringstream os;
                os << "spans equal: " << (r.spans_equal ? "yes" : "NO") << "\n";
                os << "substitution maps Q onto P: "
                   << (r.substitution_matches && r.transformed_system_matches ? "yes" : "NO")
                   << "\n";
                os << "intersection dimension: " << r.intersection_dim << "\n";
                os << "non-convexity witness: " << (r.witness_found ? "found" : "NOT FOUND")
                   << "\n";
                if (r.witness_found) {
                    os << "p: ";
                    for (auto& x : r.p_point) os << x << " ";
                    os << "\nq: ";
                    for (auto& x : r.q_point) os << x << " ";
                    os << "\np+q violates P inequality #" << r.p_violated << " and Q inequality #"
                       << r.q_violated << "\n";
                }
                emit(opts->output, os.str());
            }
        });
    }

    // ---- tdet / sl-check / o2-check / o3-check ----
    {
        auto* cmd = app.add_subcommand("tdet", "tropical determinant with multiplicity");
        auto a = std::make_shared<std::string>();
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("A", *a, "matrix file")->required();
        add_common(cmd, *opts);
        cmd->callback([=] {
            TropMatrix m = read_matrix(*a);
            TdetResult d = tdet(m);
            if (opts->format == "json")
                emit(opts->output, json{{"value", to_string(d.value)},
                                        {"multiplicity", d.multiplicity},
                                        {"in_trop_sl", in_trop_sl(m)}}
                                       .dump(2));
            else
                emit(opts->output, "tdet = " + to_string(d.value) + " attained by " +
                                       std::to_string(d.multiplicity) + " permutation(s); " +
                                       (in_trop_sl(m) ? "in" : "not in") + " Trop(SL)");
        });
    }
    {
        auto* cmd = app.add_subcommand("sl-check", "closure sampling in Trop(SL_n)");
        auto n = std::make_shared<int>(3);
        auto trials = std::make_shared<int>(10000);
        auto seed = std::make_shared<uint64_t>(0);
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("--n", *n, "matrix size (<= 5)")->capture_default_str();
        cmd->add_option("--trials", *trials, "sampled pairs")->capture_default_str();
        cmd->add_option("--seed", *seed, "random seed")->required();
        add_common(cmd, *opts);
        cmd->callback([=] {
            SlClosureReport r = sl_closure_check(*n, *trials, *seed);
            if (opts->format == "json")
                emit(opts->output, json{{"n", r.n},
                                        {"trials", r.trials},
                                        {"failures", r.failures},
                                        {"samples_drawn", r.samples_drawn}}
                                       .dump(2));
            else
                emit(opts->output, std::to_string(r.failures) + " failures in " +
                                       std::to_string(r.trials) + " trials");
        });
    }
    {
        auto* cmd = app.add_subcommand("o2-check", "classify a 2x2 matrix against Trop(O_2)");
        auto a = std::make_shared<std::string>();
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("--matrix", *a, "matrix file")->required();
        add_common(cmd, *opts);
        cmd->callback([=] {
            O2Cone c = o2_classify(read_matrix(*a));
            std::string label = c == O2Cone::kGossip            ? "gossip cone (G_2)"
                                : c == O2Cone::kColumnsSwapped  ? "columns-swapped cone"
                                : c == O2Cone::kNegativeDiagonal ? "negative all-equal cone"
                                                                 : "outside";
            emit(opts->output,
                 opts->format == "json" ? json{{"cone", label}}.dump(2) : label);
        });
    }
    {
        auto* cmd = app.add_subcommand("o3-check",
                                       "O_3 prevariety residues and the nonnegative classification");
        auto a = std::make_shared<std::string>();
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("--matrix", *a, "matrix file")->required();
        add_common(cmd, *opts);
        cmd->callback([=] {
            TropMatrix m = read_matrix(*a);
            PrevarietyReport r = o3_prevariety_check(m);
            json residues = json::array();
            std::ostringstream os;
            os << (r.satisfied ? "prevariety equations satisfied" : "prevariety equations FAILED")
               << "\n";
            for (auto& res : r.residues) {
                residues.push_back({{"equation", res.name},
                                    {"satisfied", res.satisfied},
                                    {"min", to_string(res.min_value)},
                                    {"attained", res.attained}});
                if (!res.satisfied)
                    os << "  " << res.name << ": min " << to_string(res.min_value)
                       << " attained once\n";
            }
            json j{{"satisfied", r.satisfied}, {"residues", std::move(residues)}};
            if (r.satisfied && is_nonnegative(m)) {
                O3Classification c = o3_nonneg_classify(m);
                std::string label = c.cone == O3Class::kMetric       ? "metric cone"
                                    : c.cone == O3Class::kAsymmetric ? "asymmetric cone"
                                                                     : "unclassifiable";
                j["classification"] = label;
                os << "classification: " << label << "\n";
            }
            emit(opts->output, opts->format == "json" ? j.dump(2) : os.str());
        });
    }

    // ---- realize ----
    {
        auto* cmd = app.add_subcommand("realize", "matrix realized by a graph with detours");
        auto file = std::make_shared<std::string>();
        auto transposed = std::make_shared<bool>(false);
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_option("--graph", *file, "graph JSON file")->required();
        cmd->add_flag("--transpose", *transposed, "reverse all detours first");
        add_common(cmd, *opts);
        cmd->callback([=] {
            DetourGraph g = graph_from_json(json::parse(read_input(*file)));
            if (*transposed) g = transpose_detours(g);
            TropMatrix m = realize(g);
            bool kc = kleene_compatible(g);
            if (opts->format == "json")
                emit(opts->output,
                     json{{"matrix", matrix_to_json(m)}, {"kleene_compatible", kc}}.dump(2));
            else
                emit(opts->output, matrix_to_text(m) + (kc ? "kleene-compatible\n"
                                                           : "not kleene-compatible\n"));
        });
    }

    // ---- reproduce-paper ----
    {
        auto* cmd = app.add_subcommand("reproduce-paper",
                                       "recompute the published tables and checks; exit 0 only "
                                       "if everything matches");
        auto quick = std::make_shared<bool>(false);
        auto include_n7 = std::make_shared<bool>(false);
        auto skip_l6 = std::make_shared<bool>(false);
        auto seed = std::make_shared<uint64_t>(20240901);
        auto threads = std::make_shared<int>(0);
        auto budget = std::make_shared<double>(8.0);
        auto opts = std::make_shared<CommonOpts>();
        cmd->add_flag("--quick", *quick, "n <= 5 subset with reduced sampling");
        cmd->add_flag("--include-n7", *include_n7, "add the 293,656,554-element row (slow)");
        cmd->add_flag("--skip-l6", *skip_l6, "skip the n=6 irredundant-length search");
        cmd->add_option("--seed", *seed, "seed for all randomized checks")->capture_default_str();
        cmd->add_option("--threads", *threads, "worker threads (0 = all)")->capture_default_str();
        cmd->add_option("--memory-budget-gb", *budget, "enumeration memory budget")
            ->capture_default_str();
        add_common(cmd, *opts);
        cmd->callback([=, &exit_code] {
            ReproduceOptions ro;
            ro.quick = *quick;
            ro.include_n7 = *include_n7;
            ro.include_l6 = !*skip_l6 && !*quick;
            ro.seed = *seed;
            ro.threads = *threads;
            ro.memory_budget_bytes = size_t(*budget * double(1 << 30));
            ro.on_check = [](const CheckResult& r) {
                std::cerr << (r.pass ? "[pass] " : "[FAIL] ") << r.name << ": " << r.actual;
                if (!r.pass) std::cerr << "  (expected: " << r.expected << ")";
                std::cerr << "  [" << int(r.seconds * 1000) << " ms]\n";
            };
            ReproduceReport rep = reproduce_paper(ro);
            if (opts->format == "json") {
                json checks = json::array();
                for (auto& c : rep.checks)
                    checks.push_back({{"name", c.name},
                                      {"pass", c.pass},
                                      {"expected", c.expected},
                                      {"actual", c.actual}});
                emit(opts->output,
                     json{{"all_pass", rep.all_pass}, {"checks", std::move(checks)}}.dump(2));
            } else {
                std::ostringstream os;
                int passed = 0;
                for (auto& c : rep.checks) {
                    os << (c.pass ? "pass  " : "FAIL  ") << c.name << "  " << c.actual;
                    if (!c.pass) os << "  (expected: " << c.expected << ")";
                    os << "\n";
                    passed += c.pass;
                }
                os << passed << "/" << rep.checks.size() << " checks passed\n";
                emit(opts->output, os.str());
            }
            exit_code = rep.resource_abort ? 3 : (rep.all_pass ? 0 : 2);
        });
    }

    CLI11_PARSE(app, argc, argv);
    return exit_code;
}
