#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dbgmatch/de_bruijn.hpp"
#include "dbgmatch/error.hpp"
#include "dbgmatch/io.hpp"
#include "dbgmatch/matchers.hpp"
#include "dbgmatch/oracles.hpp"
#include "dbgmatch/random.hpp"
#include "dbgmatch/reduce_ham.hpp"
#include "dbgmatch/reduce_ov.hpp"
#include "dbgmatch/verify.hpp"

namespace {

using namespace dbgmatch;

enum Exit : int { kOk = 0, kViolation = 1, kUsage = 2, kIndeterminate = 3 };

struct Display {
    std::string mode = "int";

    std::string render(std::span<const Symbol> s, unsigned sigma) const {
        if (mode == "npc") {
            return io::DisplayMap::npc().render(s);
        }
        if (mode == "digits") {
            return io::DisplayMap::digits(sigma).render(s);
        }
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i > 0) {
                out.push_back(' ');
            }
            out += std::to_string(s[i].value);
        }
        return out;
    }
};

std::string cost_text(Cost c) { return c.is_finite() ? std::to_string(c.value()) : "inf"; }

std::string_view verdict_text(Verdict v) {
    switch (v) {
    case Verdict::Feasible: return "feasible";
    case Verdict::Infeasible: return "infeasible";
    case Verdict::Indeterminate: break;
    }
    return "indeterminate";
}

void print_walk(std::ostream& os, const LabeledDigraph& g, const MatchResult& r, const Display& display) {
    if (!r.walk) {
        return;
    }
    os << "walk";
    SymbolString labels;
    for (VertexId v : r.walk->vertices) {
        os << ' ' << v;
        labels.push_back(g.label(v));
    }
    os << "\nwalk_labels " << display.render(labels, g.sigma()) << '\n';
    if (!r.pattern_edits.empty()) {
        os << "pattern_edits";
        for (auto i : r.pattern_edits) {
            os << ' ' << i;
        }
        os << '\n';
    }
    for (const auto& e : r.label_edits) {
        os << "relabel " << e.vertex << ' ' << display.render(std::span(&e.symbol, 1), g.sigma()) << '\n';
    }
}

void print_report(std::ostream& os, const ValidationReport& report) {
    for (const auto& v : report.violations) {
        os << to_string(v.kind);
        if (!v.vertices.empty()) {
            os << " vertices";
            for (auto id : v.vertices) {
                os << ' ' << id;
            }
        }
        os << ": " << v.detail << '\n';
    }
    os << (report.ok() ? "ok" : std::to_string(report.violations.size()) + " violation(s)") << '\n';
}

HamInstance load_ham(const std::string& path) { return io::ham_from_graph(io::read_graph(path).graph); }

struct Options {
    Display display;

    // shared file arguments
    std::string in;
    std::string graph;
    std::string pattern;
    std::string out_prefix;
    std::string out;

    bool skip_gadget = false;
    std::size_t edge_factor = kDefaultEdgeFactor;

    std::string kind;
    std::uint64_t seed = 1;
    std::size_t n = 5;
    std::size_t edges = 0;
    bool two_cycle_free = false;
    std::size_t count = 2;
    std::size_t dim = 3;

    std::optional<std::uint64_t> delta;
    bool witness = false;
    std::uint64_t cap = kDefaultExpansionCap;

    std::vector<std::string> inputs;
    std::size_t random_count = 0;
    std::size_t workers = 0;

    std::vector<std::size_t> bench_sizes{64, 256, 1024};
    std::vector<std::size_t> bench_lengths{64, 256};
    std::size_t bench_repeats = 3;
};

int cmd_gen_npc(const Options& o) {
    const HamInstance g = load_ham(o.in);
    const InstanceBundle b = ham::build_npc_instance(g, {o.skip_gadget, o.edge_factor});
    io::write_file(o.out_prefix + ".graph", io::write_graph(b.graph));
    io::write_file(o.out_prefix + ".pattern", io::write_pattern(b.pattern));
    io::write_file(o.out_prefix + ".meta", io::write_meta(b));
    std::cout << "vertices " << b.graph.base().vertex_count() << " edges " << b.graph.base().edge_count()
              << " pattern " << b.pattern.size() << " delta " << b.delta << '\n';
    return kOk;
}

int cmd_gen_seth(const Options& o) {
    const OvInstance ov = io::read_ov(o.in);
    const InstanceBundle b = ov::build_seth_instance(ov);
    io::write_file(o.out_prefix + ".graph", io::write_graph(b.graph));
    io::write_file(o.out_prefix + ".pattern", io::write_pattern(b.pattern));
    io::write_file(o.out_prefix + ".meta", io::write_meta(b));
    std::cout << "vertices " << b.graph.base().vertex_count() << " edges " << b.graph.base().edge_count()
              << " pattern " << b.pattern.size() << " delta " << b.delta << '\n';
    return kOk;
}

int cmd_gen_random(const Options& o) {
    gen::Rng rng(o.seed);
    std::string text = "# seed " + std::to_string(o.seed) + '\n';
    if (o.kind == "ham") {
        gen::HamGenOptions opts;
        opts.n = o.n;
        opts.edges = o.edges;
        opts.edge_factor = o.edge_factor;
        opts.two_cycle_free = o.two_cycle_free;
        text += io::write_graph(gen::random_ham(rng, opts).graph, 0);
    } else {
        text += io::write_ov(gen::random_ov(rng, o.count, o.dim));
    }
    if (o.out.empty()) {
        std::cout << text;
    } else {
        io::write_file(o.out, text);
    }
    return kOk;
}

int cmd_validate(const Options& o) {
    const io::GraphFile file = io::read_graph(o.graph);
    if (file.k == 0) {
        throw Error(ErrorCode::Range, "validation needs k >= 1 in the header");
    }
    std::optional<DeBruijnGraph> g;
    try {
        g.emplace(file.to_de_bruijn());
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NoIncomingWalk && e.code() != ErrorCode::AmbiguousImplicitLabel) {
            throw;
        }
        std::cout << "IllDefinedImplicitLabel: " << e.what() << "\n1 violation(s)\n";
        return kViolation;
    }
    const ValidationReport report = validate_de_bruijn(*g);
    print_report(std::cout, report);
    return report.ok() ? kOk : kViolation;
}

struct Loaded {
    io::GraphFile file;
    Pattern pattern;
};

Loaded load_match_inputs(const Options& o) {
    io::GraphFile file = io::read_graph(o.graph);
    Pattern p = io::read_pattern(o.pattern, file.graph.sigma());
    return {std::move(file), std::move(p)};
}

int cmd_match_exact(const Options& o) {
    const auto [file, p] = load_match_inputs(o);
    const MatchResult r = match_exact(file.graph, p);
    std::cout << "match " << (r.feasible() ? "yes" : "no") << '\n';
    print_walk(std::cout, file.graph, r, o.display);
    return kOk;
}

int cmd_match_pattern_subs(const Options& o) {
    const auto [file, p] = load_match_inputs(o);
    DpOptions opts;
    opts.delta = o.delta;
    opts.witness = o.witness;
    const MatchResult r = min_pattern_substitutions(file.graph, p, opts);
    std::cout << "cost " << cost_text(r.cost) << "\nverdict " << verdict_text(r.verdict) << '\n';
    if (o.witness) {
        print_walk(std::cout, file.graph, r, o.display);
    }
    return kOk;
}

int cmd_match_graph_subs(const Options& o) {
    const auto [file, p] = load_match_inputs(o);
    const MatchResult r = min_graph_substitutions(file.graph, p, *o.delta, {o.cap});
    std::cout << "cost " << cost_text(r.cost) << "\nverdict " << verdict_text(r.verdict)
              << "\nexpansions " << r.expansions << '\n';
    print_walk(std::cout, file.graph, r, o.display);
    return r.verdict == Verdict::Indeterminate ? kIndeterminate : kOk;
}

int cmd_oracle(const Options& o) {
    if (o.kind == "ham") {
        const auto answer = oracle::hamiltonian(load_ham(o.in));
        std::cout << "hamiltonian " << (answer.hamiltonian ? "yes" : "no") << '\n';
        if (answer.hamiltonian) {
            std::cout << "cycle";
            for (auto v : answer.cycle) {
                std::cout << ' ' << v;
            }
            std::cout << '\n';
        }
    } else if (o.kind == "ov") {
        const auto answer = oracle::orthogonal_vectors(io::read_ov(o.in));
        std::cout << "orthogonal " << (answer.orthogonal ? "yes" : "no") << '\n';
        if (answer.witness) {
            std::cout << "pair " << answer.witness->first << ' ' << answer.witness->second << '\n';
        }
    } else {
        const auto [file, p] = load_match_inputs(o);
        const auto costs = oracle::walk_enumeration(file.graph, p);
        std::cout << "pattern_subs " << cost_text(costs.pattern_subs) << "\ngraph_subs "
                  << cost_text(costs.graph_subs) << "\nwalks " << costs.walks << '\n';
    }
    return kOk;
}

int cmd_verify_reduction(const Options& o) {
    std::vector<std::string> names = o.inputs;
    std::vector<HamInstance> hams;
    std::vector<OvInstance> ovs;
    const bool npc = o.kind == "npc";
    for (const auto& path : o.inputs) {
        if (npc) {
            hams.push_back(load_ham(path));
        } else {
            ovs.push_back(io::read_ov(path));
        }
    }
    gen::Rng rng(o.seed);
    for (std::size_t i = 0; i < o.random_count; ++i) {
        std::ostringstream name;
        if (npc) {
            gen::HamGenOptions opts;
            opts.n = o.n;
            opts.edge_factor = o.edge_factor;
            opts.two_cycle_free = o.two_cycle_free;
            hams.push_back(gen::random_ham(rng, opts));
            name << "random-ham n=" << o.n;
        } else {
            ovs.push_back(gen::random_ov(rng, o.count, o.dim));
            name << "random-ov N=" << o.count << " d=" << o.dim;
        }
        name << " seed=" << o.seed << " #" << i;
        names.push_back(name.str());
    }
    if (names.empty()) {
        throw CLI::ValidationError("verify-reduction", "no instances: pass --in files or --random N");
    }
    const std::size_t workers = o.workers ? o.workers : std::max(1u, std::thread::hardware_concurrency());
    verify::NpcVerifyOptions nopts;
    nopts.skip_gadget = o.skip_gadget;
    nopts.expansion_cap = o.cap;
    nopts.edge_factor = o.edge_factor;
    const auto records = verify::run_parallel(
        names.size(),
        [&](std::size_t i) {
            return npc ? verify::verify_npc(hams[i], nopts, names[i]) : verify::verify_seth(ovs[i], names[i]);
        },
        workers);
    bool failed = false;
    bool indeterminate = false;
    for (const auto& r : records) {
        std::cout << verify::format_record(r) << '\n';
        if (r.indeterminate() && r.error.empty()) {
            indeterminate = true;
        } else if (!r.passed()) {
            failed = true;
        }
    }
    if (failed) {
        return kViolation;
    }
    return indeterminate ? kIndeterminate : kOk;
}

int cmd_bench(const Options& o) {
    gen::Rng rng(o.seed);
    std::cout << "vertices edges pattern seconds ns_per_cell\n";
    for (std::size_t n : o.bench_sizes) {
        const LabeledDigraph g = gen::random_graph(rng, n, 4, 4.0 / static_cast<double>(n));
        for (std::size_t m : o.bench_lengths) {
            const Pattern p = gen::random_pattern(rng, m, 4);
            DpOptions opts;
            opts.witness = false;
            double best = 0;
            for (std::size_t rep = 0; rep < o.bench_repeats; ++rep) {
                const auto t0 = std::chrono::steady_clock::now();
                const MatchResult r = min_pattern_substitutions(g, p, opts);
                const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
                if (rep == 0 || dt.count() < best) {
                    best = dt.count();
                }
                (void)r;
            }
            const double cells = static_cast<double>(g.edge_count() + g.vertex_count()) * static_cast<double>(m);
            std::cout << n << ' ' << g.edge_count() << ' ' << m << ' ' << best << ' ' << best * 1e9 / cells << '\n';
        }
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pattern matching on de Bruijn graphs and the matching hardness reductions"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--display", o.display.mode, "Symbol rendering: int, npc ($#01) or digits")
        ->check(CLI::IsMember({"int", "npc", "digits"}));

    auto* gen_npc = app.add_subcommand("gen-npc", "Build the Hamiltonian cycle reduction instance");
    gen_npc->add_option("--in", o.in, "Input digraph file")->required()->check(CLI::ExistingFile);
    gen_npc->add_option("--out-prefix", o.out_prefix, "Writes PREFIX.graph, PREFIX.pattern, PREFIX.meta")->required();
    gen_npc->add_flag("--skip-gadget", o.skip_gadget, "Input is already 2-cycle-free; skip vertex splitting");
    gen_npc->add_option("--edge-factor", o.edge_factor, "Allowed |E| / n")->capture_default_str();

    auto* gen_seth = app.add_subcommand("gen-seth", "Build the orthogonal vectors reduction instance");
    gen_seth->add_option("--in", o.in, "Input OV file")->required()->check(CLI::ExistingFile);
    gen_seth->add_option("--out-prefix", o.out_prefix, "Writes PREFIX.graph, PREFIX.pattern, PREFIX.meta")->required();

    auto* gen_random = app.add_subcommand("gen-random", "Generate a random instance");
    gen_random->add_option("kind", o.kind, "ham or ov")->required()->check(CLI::IsMember({"ham", "ov"}));
    gen_random->add_option("--seed", o.seed)->capture_default_str();
    gen_random->add_option("--n", o.n, "Vertices (ham)")->capture_default_str();
    gen_random->add_option("--edges", o.edges, "Edge count (ham); 0 picks one at random")->capture_default_str();
    gen_random->add_option("--edge-factor", o.edge_factor, "Allowed |E| / n (ham)")->capture_default_str();
    gen_random->add_flag("--two-cycle-free", o.two_cycle_free, "Never emit both (u,v) and (v,u)");
    gen_random->add_option("--count", o.count, "Vectors per side (ov)")->capture_default_str();
    gen_random->add_option("--dim", o.dim, "Vector dimension (ov)")->capture_default_str();
    gen_random->add_option("--out", o.out, "Output file; stdout when absent");

    auto* validate = app.add_subcommand("validate", "Check the de Bruijn properties of a graph file");
    validate->add_option("--graph", o.graph)->required()->check(CLI::ExistingFile);

    auto add_match_inputs = [&](CLI::App* sub) {
        sub->add_option("--graph", o.graph)->required()->check(CLI::ExistingFile);
        sub->add_option("--pattern", o.pattern)->required()->check(CLI::ExistingFile);
    };
    auto* exact = app.add_subcommand("match-exact", "Find a walk spelling the pattern");
    add_match_inputs(exact);

    auto* psubs = app.add_subcommand("match-pattern-subs", "Minimum pattern substitutions");
    add_match_inputs(psubs);
    psubs->add_option("--delta", o.delta, "Substitution budget");
    psubs->add_flag("--witness", o.witness, "Recover and print an optimal walk");

    auto* gsubs = app.add_subcommand("match-graph-subs", "Minimum persistent vertex relabelings");
    add_match_inputs(gsubs);
    gsubs->add_option("--delta", o.delta, "Substitution budget")->required();
    gsubs->add_option("--cap", o.cap, "Search expansion cap")->capture_default_str();

    auto* orc = app.add_subcommand("oracle", "Brute-force deciders");
    orc->add_option("kind", o.kind, "ham, ov or walks")->required()->check(CLI::IsMember({"ham", "ov", "walks"}));
    orc->add_option("--in", o.in, "Instance file (ham, ov)")->check(CLI::ExistingFile);
    orc->add_option("--graph", o.graph, "Graph file (walks)")->check(CLI::ExistingFile);
    orc->add_option("--pattern", o.pattern, "Pattern file (walks)")->check(CLI::ExistingFile);

    auto* vr = app.add_subcommand("verify-reduction", "Compare oracle and matcher on reduction instances");
    vr->add_option("kind", o.kind, "npc or seth")->required()->check(CLI::IsMember({"npc", "seth"}));
    vr->add_option("--in", o.inputs, "Instance files")->check(CLI::ExistingFile);
    vr->add_option("--random", o.random_count, "Also verify this many generated instances")->capture_default_str();
    vr->add_option("--seed", o.seed)->capture_default_str();
    vr->add_option("--n", o.n, "Vertices of generated Hamiltonian instances")->capture_default_str();
    vr->add_flag("--two-cycle-free", o.two_cycle_free, "Generate 2-cycle-free Hamiltonian instances");
    vr->add_option("--count", o.count, "Vectors per side of generated OV instances")->capture_default_str();
    vr->add_option("--dim", o.dim, "Dimension of generated OV instances")->capture_default_str();
    vr->add_flag("--skip-gadget", o.skip_gadget, "Inputs are 2-cycle-free; skip vertex splitting");
    vr->add_option("--edge-factor", o.edge_factor, "Allowed |E| / n")->capture_default_str();
    vr->add_option("--cap", o.cap, "Search expansion cap")->capture_default_str();
    vr->add_option("--workers", o.workers, "Worker threads; 0 uses all cores")->capture_default_str();

    auto* bench = app.add_subcommand("bench", "Time the pattern substitution program on random graphs");
    bench->add_option("--seed", o.seed)->capture_default_str();
    bench->add_option("--sizes", o.bench_sizes, "Vertex counts");
    bench->add_option("--lengths", o.bench_lengths, "Pattern lengths");
    bench->add_option("--repeats", o.bench_repeats)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*gen_npc) return cmd_gen_npc(o);
        if (*gen_seth) return cmd_gen_seth(o);
        if (*gen_random) return cmd_gen_random(o);
        if (*validate) return cmd_validate(o);
        if (*exact) return cmd_match_exact(o);
        if (*psubs) return cmd_match_pattern_subs(o);
        if (*gsubs) return cmd_match_graph_subs(o);
        if (*orc) {
            if (o.kind == "walks" ? (o.graph.empty() || o.pattern.empty()) : o.in.empty()) {
                throw CLI::ValidationError("oracle", o.kind == "walks" ? "needs --graph and --pattern" : "needs --in");
            }
            return cmd_oracle(o);
        }
        if (*vr) return cmd_verify_reduction(o);
        if (*bench) return cmd_bench(o);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        const bool cap = e.code() == ErrorCode::CapExceeded || e.code() == ErrorCode::SizeCap;
        return cap ? kIndeterminate : kUsage;
    }
    return kUsage;
}
