#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "vsplit/betti.hpp"
#include "vsplit/complex.hpp"
#include "vsplit/corpus.hpp"
#include "vsplit/decomposable.hpp"
#include "vsplit/graph.hpp"
#include "vsplit/homology.hpp"
#include "vsplit/io.hpp"
#include "vsplit/splittable.hpp"
#include "vsplit/verify.hpp"

using namespace vsplit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

/// Bad flags, unreadable input, or an input the requested mode cannot handle.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Field parse_field(const std::string& text)
{
    if (text.empty() || text == "q" || text == "Q" || text == "QQ")
        return Field::rationals();
    if (text.rfind("p=", 0) == 0) {
        try {
            return Field::prime(detail::parse_uint(text.substr(2), "prime"));
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }
    throw UsageError("--field expects q or p=PRIME, got '" + text + "'");
}

std::string default_field_text()
{
    const char* env = std::getenv("VSPLIT_FIELD");
    return env ? env : "q";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Where the input comes from and, for graphs, which ideal to take.
struct InputSpec {
    std::string positional;
    std::string ideal;
    std::string complex;
    std::string graph;
};

ParsedInput load_input(const InputSpec& in)
{
    const int given = !in.positional.empty() + (!in.complex.empty()) + (!in.graph.empty()) +
                      (in.graph.empty() && !in.ideal.empty());
    if (given != 1)
        throw UsageError("give exactly one input: FILE, --ideal FILE, --complex FILE or --graph FILE");
    if (!in.graph.empty())
        return parse_graph(read_file(in.graph));
    if (!in.complex.empty())
        return parse_complex(read_file(in.complex));
    if (!in.ideal.empty())
        return parse_ideal(read_file(in.ideal));
    return parse_input(read_file(in.positional));
}

// ---------------------------------------------------------------- betti

struct BettiOptions {
    InputSpec input;
    std::string mode = "oracle";
    std::string format = "grid";
    std::string field;
    bool check = false;
    bool quotient = false;
};

/// The ideal whose table is computed, plus what each mode needs.
struct BettiSubjectData {
    MonomialIdeal ideal;
    Names names;
    std::string label;
    std::optional<SimplicialComplex> complex;
    std::optional<Graph> cover_of;
};

BettiSubjectData betti_subject(const BettiOptions& o)
{
    auto parsed = load_input(o.input);
    if (auto* pi = std::get_if<ParsedIdeal>(&parsed))
        return {pi->ideal, pi->names, "I = " + format_ideal(pi->ideal, pi->names), std::nullopt, std::nullopt};
    if (auto* pc = std::get_if<ParsedComplex>(&parsed)) {
        auto ideal = stanley_reisner_ideal(pc->complex);
        return {ideal, pc->names, "I_D for D = " + format_complex(pc->complex, pc->names), pc->complex, std::nullopt};
    }
    auto& pg = std::get<ParsedGraph>(parsed);
    const std::string which = (o.input.ideal.empty() || o.input.graph.empty()) ? "edge" : o.input.ideal;
    if (which == "edge")
        return {edge_ideal(pg.graph), pg.names, "edge ideal I(G)", std::nullopt, std::nullopt};
    if (which == "cover")
        return {cover_ideal(pg.graph), pg.names, "cover ideal I(G)^v", std::nullopt, pg.graph};
    throw UsageError("with --graph, --ideal must be edge or cover, got '" + which + "'");
}

std::optional<BettiTable> run_mode(const std::string& mode, const BettiSubjectData& s, const Field& field,
                                   std::string& why_not)
{
    if (mode == "oracle")
        return s.complex ? hochster_betti(*s.complex, field) : koszul_betti(s.ideal, field);
    if (mode == "recursive") {
        if (s.cover_of) {
            const auto& g = *s.cover_of;
            if (g.edge_count() == 0)
                return koszul_betti(s.ideal, field);
            const auto delta = independence_complex(g);
            std::optional<std::size_t> shed;
            for_each_bit(g.vertices(), [&](std::size_t v) {
                if (!shed && is_shedding(delta, v))
                    shed = v;
            });
            if (!shed) {
                why_not = "the independence complex has no shedding vertex; recursive mode needs one";
                return std::nullopt;
            }
            return cover_betti_recursive(g, *shed, field);
        }
        auto tree = vertex_split(s.ideal);
        if (!tree) {
            why_not = "input is not vertex splittable; recursive mode needs a splitting certificate";
            return std::nullopt;
        }
        return betti_recursive(*tree);
    }
    if (mode == "sets") {
        if (auto tree = vertex_split(s.ideal))
            return betti_from_sets(quotient_order_from_split(*tree));
        std::optional<LinearQuotientOrder> order;
        try {
            order = find_linear_quotients(s.ideal);
        } catch (const std::length_error&) {
            why_not = "input is not vertex splittable and too large for a linear-quotient search";
            return std::nullopt;
        }
        if (!order) {
            why_not = "input has no linear quotients; sets mode needs an admissible order";
            return std::nullopt;
        }
        return betti_from_sets(*order);
    }
    throw UsageError("--mode must be oracle, recursive or sets, got '" + mode + "'");
}

int cmd_betti(const BettiOptions& o)
{
    const auto field = parse_field(o.field.empty() ? default_field_text() : o.field);
    if (o.format != "grid" && o.format != "flat")
        throw UsageError("--format must be grid or flat, got '" + o.format + "'");
    const auto subject = betti_subject(o);

    std::string why_not;
    auto table = run_mode(o.mode, subject, field, why_not);
    if (!table)
        throw UsageError(why_not);

    int code = kExitOk;
    std::vector<std::string> check_lines;
    if (o.check) {
        for (const std::string other : {"oracle", "recursive", "sets"}) {
            std::string skip;
            const auto t = run_mode(other, subject, field, skip);
            if (!t) {
                check_lines.push_back("check " + other + ": skipped (" + skip + ")");
                continue;
            }
            const bool same = *t == *table;
            check_lines.push_back("check " + other + ": " + (same ? "agrees" : "DIFFERS " + format_inline(*t)));
            if (!same)
                code = kExitViolation;
        }
    }

    const auto shown = o.quotient ? quotient_table(*table) : *table;
    if (o.format == "flat") {
        std::cout << format_flat(shown);
    } else {
        std::cout << "betti table of " << (o.quotient ? "R/I, " : "") << subject.label << " over " << field.name()
                  << " (mode " << o.mode << ")\n"
                  << format_grid(shown) << "pd = " << optional_to_string(pd(shown))
                  << ", reg = " << optional_to_string(reg(shown)) << '\n';
    }
    for (const auto& l : check_lines)
        (o.format == "flat" ? std::cerr : std::cout) << l << '\n';
    return code;
}

// ---------------------------------------------------------------- classify

struct ClassifyOptions {
    InputSpec input;
    std::string field;
    std::size_t max_gens = 16;
    std::size_t max_n = 10;
};

void classify_ideal(const ParsedIdeal& p, const ClassifyOptions& o, const Field& field)
{
    const auto& ideal = p.ideal;
    const auto& names = p.names;
    if (ideal.size() > o.max_gens)
        throw UsageError("refusing: " + std::to_string(ideal.size()) + " generators exceed --max-gens " +
                         std::to_string(o.max_gens));
    if (ideal.num_vars() > o.max_n)
        throw UsageError("refusing: " + std::to_string(ideal.num_vars()) + " variables exceed --max-n " +
                         std::to_string(o.max_n));
    std::cout << "ideal: " << format_ideal(ideal, names) << '\n';
    std::cout << "square-free: " << yes_no(is_squarefree(ideal)) << '\n';
    const auto tree = vertex_split(ideal);
    std::cout << "vertex splittable: " << yes_no(tree != nullptr);
    if (tree)
        std::cout << "; certificate " << format_split_tree(*tree, names);
    std::cout << '\n';
    std::optional<LinearQuotientOrder> order;
    if (tree)
        order = quotient_order_from_split(*tree);
    else
        order = find_linear_quotients(ideal, o.max_gens);
    std::cout << "linear quotients: " << yes_no(order.has_value());
    if (order)
        std::cout << "; order " << format_quotient_order(*order, names);
    std::cout << '\n';
    const auto table = koszul_betti(ideal, field);
    std::cout << "linear resolution: " << yes_no(has_linear_resolution(ideal, field)) << '\n';
    std::cout << "betti (" << field.name() << "): " << format_inline(table) << '\n';
    std::cout << "pd(I) = " << optional_to_string(pd(table)) << ", reg(I) = " << optional_to_string(reg(table))
              << '\n';
    if (is_squarefree(ideal) && !ideal.is_unit() && !ideal.is_zero()) {
        std::vector<VarSet> supports;
        for (const auto& g : ideal.generators())
            supports.push_back(g.support());
        const auto delta = complex_of_ideal(intersect_primes(supports, ideal.num_vars()));
        const auto dual = vertex_decomposable(delta);
        std::cout << "complex with dual facet ideal I: " << format_complex(delta, names) << '\n';
        std::cout << "that complex vertex decomposable: " << yes_no(dual != nullptr) << '\n';
    }
}

void classify_complex(const ParsedComplex& p, const ClassifyOptions& o, const Field& field)
{
    const auto& c = p.complex;
    const auto& names = p.names;
    if (static_cast<std::size_t>(c.ground_size()) > o.max_n)
        throw UsageError("refusing: " + std::to_string(c.ground_size()) + " vertices exceed --max-n " +
                         std::to_string(o.max_n));
    std::cout << "complex: " << format_complex(c, names) << '\n';
    std::cout << "dimension: " << c.dimension() << "; pure: " << yes_no(is_pure(c)) << '\n';
    const auto tree = vertex_decomposable(c);
    std::cout << "vertex decomposable: " << yes_no(tree != nullptr);
    if (tree)
        std::cout << "; certificate " << format_decomposition(*tree, names);
    std::cout << '\n';
    std::cout << "cohen-macaulay (" << field.name() << "): " << yes_no(is_cohen_macaulay(c, field)) << '\n';
    const auto sr = stanley_reisner_ideal(c);
    std::cout << "stanley-reisner ideal: " << format_ideal(sr, names) << '\n';
    const auto q = quotient_table(hochster_betti(c, field));
    std::cout << "pd(R/I) = " << optional_to_string(pd(q)) << ", reg(R/I) = " << optional_to_string(reg(q))
              << ", bight = " << bight(c) << '\n';
    if (tree) {
        const auto rec = pd_reg_recursive(*tree);
        std::cout << "recursive pd = " << rec.pd << ", reg = " << rec.reg << '\n';
    }
    if (!c.is_full_simplex()) {
        const auto dual = dual_facet_ideal(c);
        const auto split = vertex_split(dual);
        std::cout << "dual facet ideal: " << format_ideal(dual, names) << "; vertex splittable: "
                  << yes_no(split != nullptr);
        if (split)
            std::cout << "; certificate " << format_split_tree(*split, names);
        std::cout << '\n';
    }
}

void classify_graph(const ParsedGraph& p, const ClassifyOptions& o, const Field& field)
{
    const auto& g = p.graph;
    const auto& names = p.names;
    if (g.n() > o.max_n)
        throw UsageError("refusing: " + std::to_string(g.n()) + " vertices exceed --max-n " + std::to_string(o.max_n));
    const auto peo = perfect_elimination_order(g);
    const auto cpeo = perfect_elimination_order(complement(g));
    std::cout << "graph: " << g.n() << " vertices, " << g.edge_count() << " edges\n";
    std::cout << "chordal: " << yes_no(peo.has_value()) << "; complement chordal: " << yes_no(cpeo.has_value())
              << '\n';
    if (peo)
        std::cout << "elimination order: " << format_order(*peo, names) << '\n';
    if (cpeo)
        std::cout << "complement elimination order: " << format_order(*cpeo, names) << '\n';
    const bool bip = is_bipartite(g);
    std::cout << "bipartite: " << yes_no(bip);
    if (bip) {
        const auto cert = is_scm_bipartite(g);
        std::cout << "; sequentially cohen-macaulay: " << yes_no(cert != nullptr);
        if (cert)
            std::cout << "; certificate " << format_scm(*cert, names);
    }
    std::cout << '\n';
    const auto delta = independence_complex(g);
    const auto vd = vertex_decomposable(delta);
    std::cout << "vertex decomposable: " << yes_no(vd != nullptr);
    if (vd)
        std::cout << "; certificate " << format_decomposition(*vd, names);
    std::cout << '\n';
    const auto shed = domination_shedding(g);
    std::cout << "domination shedding vertices: " << (shed.empty() ? "-" : format_order(shed, names)) << '\n';
    std::cout << "edge ideal: " << format_ideal(edge_ideal(g), names) << '\n';
    std::cout << "cover ideal: " << format_ideal(cover_ideal(g), names) << '\n';
    if (g.edge_count() > 0) {
        const auto f = froberg_equivalence(g, field);
        std::cout << "edge ideal linear resolution: " << yes_no(f.edge_ideal_linear_resolution)
                  << "; vertex splittable: " << yes_no(f.edge_ideal_vertex_splittable)
                  << "; agree: " << yes_no(f.all_agree()) << '\n';
        const auto d = corchor1_equivalence(g, field);
        std::cout << "dual independence complex vertex decomposable: " << yes_no(d.dual_vertex_decomposable)
                  << "; cohen-macaulay: " << yes_no(d.dual_cohen_macaulay) << "; agree: " << yes_no(d.all_agree())
                  << '\n';
    }
}

int cmd_classify(const ClassifyOptions& o)
{
    if (o.max_gens == 0 || o.max_n == 0)
        throw UsageError("caps must be positive");
    const auto field = parse_field(o.field.empty() ? default_field_text() : o.field);
    const auto parsed = load_input(o.input);
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ParsedIdeal>)
                classify_ideal(p, o, field);
            else if constexpr (std::is_same_v<T, ParsedComplex>)
                classify_complex(p, o, field);
            else
                classify_graph(p, o, field);
        },
        parsed);
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    std::string suite = "all";
    std::string field;
    VerifyConfig cfg;
};

int cmd_verify(VerifyOptions o)
{
    o.cfg.field = parse_field(o.field.empty() ? default_field_text() : o.field);
    std::vector<std::string> names;
    if (o.suite == "all") {
        for (const auto& [name, fn] : verify_suites())
            names.push_back(name);
    } else if (verify_suites().count(o.suite)) {
        names.push_back(o.suite);
    } else {
        std::string known;
        for (const auto& [name, fn] : verify_suites())
            known += " " + name;
        throw UsageError("unknown suite '" + o.suite + "'; known:" + known + " all");
    }
    std::cout << "verify field=" << o.cfg.field.name() << " max-n=" << o.cfg.max_n << " seed=" << o.cfg.seed
              << " samples=" << o.cfg.samples << '\n';
    bool ok = true;
    for (const auto& name : names) {
        const auto report = run_suite(name, o.cfg);
        std::cout << report.render();
        ok = ok && report.passed();
    }
    std::cout << (ok ? "all suites passed" : "FAILURES found") << '\n';
    return ok ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
    std::uint64_t seed = 1;
    std::string output;
    std::size_t vars = 6;
    int depth = 4;
    std::size_t max_gens = 12;
    std::size_t n = 6;
    double p = 0.5;
    std::size_t facets = 4;
};

void emit(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write '" + path + "'");
    out << text;
}

int gen_splittable(const GenOptions& o)
{
    if (o.vars == 0 || o.vars > kMaxVars || o.depth < 0 || o.max_gens == 0)
        throw UsageError("need 1 <= --vars <= 64, --depth >= 0, --max-gens >= 1");
    SplittableParams params;
    params.vars = o.vars;
    params.depth = o.depth;
    params.max_gens = o.max_gens;
    Rng rng(o.seed);
    const auto tree = random_splittable(params, rng);
    const auto names = default_names(o.vars);
    emit(write_ideal(tree->ideal(), names) + "# certificate: " + format_split_tree(*tree, names) + "\n", o.output);
    return kExitOk;
}

int gen_graph(const GenOptions& o)
{
    if (o.n == 0 || o.n > kMaxVars || o.p < 0.0 || o.p > 1.0)
        throw UsageError("need 1 <= --n <= 64 and 0 <= --p <= 1");
    Rng rng(o.seed);
    emit(write_graph(random_graph(o.n, o.p, rng)), o.output);
    return kExitOk;
}

int gen_complex(const GenOptions& o)
{
    if (o.n == 0 || o.n > kMaxVars || o.facets == 0)
        throw UsageError("need 1 <= --n <= 64 and --facets >= 1");
    Rng rng(o.seed);
    emit(write_complex(random_complex(o.n, o.facets, rng), default_names(o.n)), o.output);
    return kExitOk;
}

void add_input_options(CLI::App* cmd, InputSpec& in, bool graph_ideal_choice)
{
    cmd->add_option("input", in.positional, "input file with a kind: header");
    cmd->add_option("--ideal", in.ideal,
                    graph_ideal_choice ? "ideal file, or with --graph: edge|cover" : "ideal file");
    cmd->add_option("--complex", in.complex, "complex file");
    cmd->add_option("--graph", in.graph, "graph file");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"vsplit: vertex splittable ideals, vertex decomposable complexes and graph ideals"};
    app.require_subcommand(1);
    int code = kExitOk;

    BettiOptions betti;
    auto* betti_cmd = app.add_subcommand("betti", "graded Betti numbers of an ideal");
    add_input_options(betti_cmd, betti.input, true);
    betti_cmd->add_option("--mode", betti.mode, "oracle | recursive | sets")->capture_default_str();
    betti_cmd->add_option("--format", betti.format, "grid | flat")->capture_default_str();
    betti_cmd->add_option("--field", betti.field, "q | p=PRIME (default: $VSPLIT_FIELD or q)");
    betti_cmd->add_flag("--check", betti.check, "run every applicable mode and compare");
    betti_cmd->add_flag("--quotient", betti.quotient, "print the table of R/I instead of I");
    betti_cmd->callback([&] { code = cmd_betti(betti); });

    ClassifyOptions classify;
    auto* classify_cmd = app.add_subcommand("classify", "report structural predicates with certificates");
    add_input_options(classify_cmd, classify.input, false);
    classify_cmd->add_option("--field", classify.field, "q | p=PRIME");
    classify_cmd->add_option("--max-gens", classify.max_gens, "refuse ideals with more generators")
        ->capture_default_str();
    classify_cmd->add_option("--max-n", classify.max_n, "refuse inputs with more vertices or variables")
        ->capture_default_str();
    classify_cmd->callback([&] { code = cmd_classify(classify); });

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "run theorem-check suites");
    verify_cmd->add_option("suite", verify.suite, "suite name or all")->capture_default_str();
    verify_cmd->add_option("--max-n", verify.cfg.max_n, "exhaustive bound")->capture_default_str();
    verify_cmd->add_option("--seed", verify.cfg.seed, "sampling seed")->capture_default_str();
    verify_cmd->add_option("--samples", verify.cfg.samples, "sample size")->capture_default_str();
    verify_cmd->add_option("--sample-n", verify.cfg.sample_n, "vertices of sampled complexes")->capture_default_str();
    verify_cmd->add_option("--vars", verify.cfg.vars, "variables of sampled ideals")->capture_default_str();
    verify_cmd->add_option("--max-gens", verify.cfg.max_gens, "generator cap of sampled ideals")
        ->capture_default_str();
    verify_cmd->add_option("--depth", verify.cfg.depth, "depth of sampled certificates")->capture_default_str();
    verify_cmd->add_option("--field", verify.field, "q | p=PRIME");
    verify_cmd->callback([&] { code = cmd_verify(verify); });

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate seeded inputs");
    gen_cmd->require_subcommand(1);
    auto add_common = [&](CLI::App* c) {
        c->add_option("--seed", gen.seed)->capture_default_str();
        c->add_option("-o,--output", gen.output, "output file (default stdout)");
    };
    auto* gen_ideal = gen_cmd->add_subcommand("splittable-ideal", "random vertex splittable ideal with certificate");
    add_common(gen_ideal);
    gen_ideal->add_option("--vars", gen.vars)->capture_default_str();
    gen_ideal->add_option("--depth", gen.depth)->capture_default_str();
    gen_ideal->add_option("--max-gens", gen.max_gens)->capture_default_str();
    gen_ideal->callback([&] { code = gen_splittable(gen); });
    auto* gen_g = gen_cmd->add_subcommand("graph", "Erdos-Renyi graph");
    add_common(gen_g);
    gen_g->add_option("--n", gen.n)->capture_default_str();
    gen_g->add_option("--p", gen.p)->capture_default_str();
    gen_g->callback([&] { code = gen_graph(gen); });
    auto* gen_c = gen_cmd->add_subcommand("complex", "random simplicial complex");
    add_common(gen_c);
    gen_c->add_option("--n", gen.n)->capture_default_str();
    gen_c->add_option("--facets", gen.facets)->capture_default_str();
    gen_c->callback([&] { code = gen_complex(gen); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return code;
}
