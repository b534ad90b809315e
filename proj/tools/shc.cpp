// shc: command-line front end.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error,
// 3 a basis would exceed the budget.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "shc/classical.hpp"
#include "shc/serialize.hpp"

namespace {

using namespace shc;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

struct Options {
    std::string command;
    std::string builtin_name;
    std::string input;
    int max_degree = 3;
    int max_cochain_degree = 2;
    std::string field;
    std::uint32_t prime = 0;
    std::string suite = "all";
    std::uint64_t seed = 0;
    bool json = false;
    std::uint64_t budget = 0;
    std::string cls = "unit";
    std::string mutate;
    bool representatives = false;
    int degree = 1;
    bool cochain = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read file '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

TripleSpec load_triple(const Options& o)
{
    if (o.builtin_name.empty() == o.input.empty())
        throw InputError("exactly one of --builtin and --input is required");
    TripleSpec t;
    if (!o.builtin_name.empty()) {
        t = builtin(o.builtin_name);
    } else {
        t = load_json(read_file(o.input));
        if (t.name.empty())
            t.name = o.input;
    }
    if (o.field == "Q")
        t.field = FieldConfig::rationals();
    else if (o.field == "Fp" || (o.field.empty() && o.prime != 0))
        t.field = FieldConfig::prime_field(o.prime != 0 ? o.prime : (t.field.kind == FieldConfig::Kind::Prime ? t.field.prime : 101));
    else if (!o.field.empty())
        throw InputError("--field must be Q or Fp");
    if (t.field.kind == FieldConfig::Kind::Prime && !is_prime(t.field.prime))
        throw InputError("--prime: " + std::to_string(t.field.prime) + " is not prime");
    return t;
}

Mutation parse_mutation(const std::string& text)
{
    Mutation m;
    if (text.empty())
        return m;
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon);
    int index = 0;
    if (colon != std::string::npos) {
        try {
            index = std::stoi(text.substr(colon + 1));
        } catch (const std::exception&) {
            throw InputError("--mutate: bad index in '" + text + "'");
        }
    }
    if (kind == "boundary")
        m.kind = Mutation::Kind::BoundaryTerm;
    else if (kind == "cyclic")
        m.kind = Mutation::Kind::CyclicSign;
    else if (kind == "comp")
        m.kind = Mutation::Kind::CompSlot;
    else
        throw InputError("--mutate must be boundary:K, cyclic or comp:I");
    m.index = index;
    return m;
}

void print_json(const Json& j)
{
    std::cout << j.dump(2) << "\n";
}

void print_suite_table(const std::vector<SuiteResult>& results)
{
    std::cout << std::left << std::setw(14) << "suite" << std::right << std::setw(10) << "checks" << std::setw(10)
              << "failures" << "  result\n";
    for (const auto& r : results)
        std::cout << std::left << std::setw(14) << r.suite << std::right << std::setw(10) << r.checks << std::setw(10)
                  << r.failure_count << "  " << (r.passed() ? "pass" : "FAIL") << "\n";
    for (const auto& r : results) {
        for (const auto& f : r.failures)
            std::cout << "  " << r.suite << ": " << f.check << "\n    triple " << r.triple << ", " << f.inputs
                      << "\n    expected " << f.expected << ", got " << f.got << "\n";
        if (r.failure_count > r.failures.size())
            std::cout << "  " << r.suite << ": " << (r.failure_count - r.failures.size()) << " further failures\n";
        for (const auto& n : r.notes)
            std::cout << "  " << r.suite << ": " << n << "\n";
    }
}

template <Field F>
int cmd_homology(const Options& o, const Context<F>& ctx, bool co)
{
    // largest requested basis first, so an oversized request names its own degree
    const auto budget = ctx.options().budget;
    if (co)
        cochain_dim(ctx.spec(), o.max_degree, budget);
    else
        chain_dim(ctx.spec(), o.max_degree, budget);
    auto report = co ? cohomology(ctx, o.max_degree) : homology(ctx, o.max_degree);
    if (o.json) {
        print_json(homology_json(ctx, report, o.representatives));
        return kOk;
    }
    std::cout << (co ? "cohomology" : "homology") << " of " << report.triple << " over " << report.field << "\n";
    std::cout << std::setw(6) << "degree" << std::setw(12) << "dim" << std::setw(10) << "betti\n";
    for (const auto& d : report.degrees)
        std::cout << std::setw(6) << d.degree << std::setw(12) << d.dim << std::setw(9) << d.betti << "\n";
    return kOk;
}

template <Field F>
int cmd_verify(const Options& o, const Context<F>& ctx)
{
    std::vector<std::string> suites;
    if (o.suite == "all")
        suites = suite_names();
    else if (is_suite(o.suite))
        suites = {o.suite};
    else
        throw InputError("unknown suite '" + o.suite + "'");
    SuiteBounds bounds{o.max_degree, o.max_cochain_degree, o.seed};
    std::vector<SuiteResult> results;
    bool passed = true;
    for (const auto& s : suites) {
        results.push_back(verify(ctx, s, bounds));
        passed = passed && results.back().passed();
    }
    if (o.json) {
        Json j;
        j["triple"] = ctx.spec().name;
        j["field"] = ctx.field().name();
        j["passed"] = passed;
        Json arr = Json::array();
        for (const auto& r : results)
            arr.push_back(suite_json(r));
        j["results"] = std::move(arr);
        print_json(j);
    } else {
        print_suite_table(results);
    }
    return passed ? kOk : kCheckFailed;
}

template <Field F>
int cmd_classical(const Options& o, const Context<F>& ctx)
{
    auto r = classical_compare(ctx, o.max_degree);
    if (o.json)
        print_json(suite_json(r));
    else
        print_suite_table({r});
    return r.passed() ? kOk : kCheckFailed;
}

template <Field F>
int cmd_bvprobe(const Options& o, const Context<F>& ctx)
{
    ChainVector<F> c = o.cls == "unit" ? unit_class(ctx) : parse_chain(ctx, read_file(o.cls));
    auto r = bv_probe(ctx, c, o.max_degree);
    if (o.json) {
        print_json(bv_json(r));
    } else {
        std::cout << r.status << "\n";
        std::cout << std::setw(6) << "m" << std::setw(10) << "dim H^m" << std::setw(12) << "dim H_k-m" << std::setw(8)
                  << "rank" << "  bijective\n";
        for (const auto& d : r.degrees)
            std::cout << std::setw(6) << d.degree << std::setw(10) << d.cohomology_dim << std::setw(12) << d.homology_dim
                      << std::setw(8) << d.rank << "  " << (d.bijective ? "yes" : "no") << "\n";
        for (const auto& f : r.failures)
            std::cout << "  " << f << "\n";
    }
    return r.status.rfind("applicable,", 0) == 0 || !r.applicable ? kOk : kCheckFailed;
}

template <Field F>
int cmd_basis(const Options& o, const Context<F>& ctx)
{
    const TriangleLayout& lay = o.cochain ? ctx.input_layout(o.degree) : ctx.chain_layout(o.degree);
    Json arr = Json::array();
    for (Index k = 0; k < lay.size(); ++k) {
        auto t = lay.unpack(k);
        if (o.json) {
            Json e;
            e["index"] = k;
            e["a"] = t.a;
            e["b"] = t.b;
            arr.push_back(std::move(e));
        } else {
            std::cout << k << "  a=";
            for (std::size_t i = 0; i < t.a.size(); ++i)
                std::cout << (i ? "," : "(") << t.a[i];
            std::cout << (t.a.empty() ? "()" : ")") << " b=";
            for (std::size_t i = 0; i < t.b.size(); ++i)
                std::cout << (i ? "," : "(") << t.b[i];
            std::cout << (t.b.empty() ? "()" : ")") << "\n";
        }
    }
    if (o.json)
        print_json(arr);
    return kOk;
}

template <Field F>
int run(const Options& o, const TripleSpec& spec, F field)
{
    EngineOptions eo;
    if (o.budget != 0)
        eo.budget = o.budget;
    eo.mutation = parse_mutation(o.mutate);
    Context<F> ctx(spec, std::move(field), eo);
    if (o.command == "homology")
        return cmd_homology(o, ctx, false);
    if (o.command == "cohomology")
        return cmd_homology(o, ctx, true);
    if (o.command == "verify")
        return cmd_verify(o, ctx);
    if (o.command == "classical")
        return cmd_classical(o, ctx);
    if (o.command == "bvprobe")
        return cmd_bvprobe(o, ctx);
    return cmd_basis(o, ctx);
}

int cmd_validate(const Options& o, const TripleSpec& spec)
{
    auto report = validate(spec);
    if (o.json) {
        print_json(validation_json(report));
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.passed ? "pass  " : "FAIL  ") << c.name;
            if (!c.passed) {
                std::cout << "  witness (";
                for (std::size_t k = 0; k < c.witness.size(); ++k)
                    std::cout << (k ? "," : "") << c.witness[k];
                std::cout << ")";
                if (!c.detail.empty())
                    std::cout << "  " << c.detail;
            }
            std::cout << "\n";
        }
    }
    return report.ok() ? kOk : kCheckFailed;
}

int dispatch(const Options& o)
{
    TripleSpec spec = load_triple(o);
    if (o.command == "validate")
        return cmd_validate(o, spec);
    if (o.max_degree < 0 || o.max_cochain_degree < 0 || o.degree < 0)
        throw InputError("degree bounds must be >= 0");
    auto report = validate(spec);
    if (!report.ok()) {
        std::cerr << "shc: triple fails validation:";
        for (const auto& c : report.failures())
            std::cerr << " " << c.name;
        std::cerr << "\n";
        return kInputError;
    }
    if (spec.field.kind == FieldConfig::Kind::Prime)
        return run(o, spec, PrimeField(spec.field.prime));
    return run(o, spec, Rationals{});
}

}  // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Secondary Hochschild (co)homology of triples (A, B, eps)", "shc"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto common = [&](CLI::App* sub) {
        auto* src = sub->add_option_group("source");
        src->add_option("--builtin", o.builtin_name, "Builtin triple: T_triv, T_dual, T_full, T_u2, T_z2");
        src->add_option("--input", o.input, "Triple JSON file");
        src->require_option(1);
        sub->add_option("--field", o.field, "Q or Fp (overrides the triple's field)");
        sub->add_option("--prime", o.prime, "Prime for Fp");
        sub->add_flag("--json", o.json, "Emit JSON");
        sub->add_option("--budget", o.budget, "Basis size cap (default SHC_BUDGET or 1000000)");
        sub->add_option("--mutate", o.mutate, "Sign-flip negative control: boundary:K, cyclic or comp:I")
            ->group("");
    };

    auto* validate_cmd = app.add_subcommand("validate", "Check the algebra axioms of a triple");
    common(validate_cmd);
    auto* hom = app.add_subcommand("homology", "Secondary Hochschild homology");
    auto* coh = app.add_subcommand("cohomology", "Secondary Hochschild cohomology");
    for (auto* sub : {hom, coh}) {
        common(sub);
        sub->add_option("--max-degree", o.max_degree, "Highest degree");
        sub->add_flag("--representatives", o.representatives, "Include representatives in JSON output");
    }
    auto* ver = app.add_subcommand("verify", "Run identity suites");
    common(ver);
    ver->add_option("--max-degree", o.max_degree, "Highest chain degree");
    ver->add_option("--max-cochain-degree", o.max_cochain_degree, "Highest cochain degree for chain-level suites");
    ver->add_option("--suite", o.suite, "Suite name or 'all'");
    ver->add_option("--seed", o.seed, "Seed for randomized checks");
    auto* cls = app.add_subcommand("classical", "Compare with the classical Hochschild complexes (dim B = 1)");
    common(cls);
    cls->add_option("--max-degree", o.max_degree, "Highest degree");
    auto* bv = app.add_subcommand("bvprobe", "Probe for a BV operator induced by a cycle");
    common(bv);
    bv->add_option("--max-degree", o.max_degree, "Highest cohomology degree");
    bv->add_option("--class", o.cls, "'unit' or a chain JSON file");
    auto* basis_cmd = app.add_subcommand("basis", "List the basis of a chain or cochain input space");
    common(basis_cmd);
    basis_cmd->add_option("--degree", o.degree, "Degree");
    basis_cmd->add_flag("--cochain", o.cochain, "Cochain inputs instead of chains");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }
    o.command = app.get_subcommands().front()->get_name();

    try {
        return dispatch(o);
    } catch (const BudgetExceeded& e) {
        std::cerr << "shc: " << e.what() << "\n";
        return kBudget;
    } catch (const Error& e) {
        std::cerr << "shc: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "shc: " << e.what() << "\n";
        return kInputError;
    }
}
