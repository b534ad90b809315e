#include "shc/serialize.hpp"

#include <type_traits>

namespace shc {

namespace {

Json parse_document(std::string_view text, const char* what)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string(what) + ": invalid JSON: " + e.what());
    }
}

const Json& require(const Json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key))
        throw InputError(where + ": missing key \"" + key + "\"");
    return obj[key];
}

int parse_degree(const Json& doc, const std::string& where)
{
    const Json& d = require(doc, "degree", where);
    if (!d.is_number_integer() || d.get<long long>() < 0)
        throw InputError(where + ".degree: expected a non-negative integer");
    return static_cast<int>(d.get<long long>());
}

std::vector<int> parse_indices(const Json& j, std::size_t len, int bound, const std::string& where)
{
    if (!j.is_array() || j.size() != len)
        throw InputError(where + ": expected an array of " + std::to_string(len) + " basis indices");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() >= bound)
            throw InputError(where + ": basis index out of range 0.." + std::to_string(bound - 1));
        out.push_back(static_cast<int>(v.get<long long>()));
    }
    return out;
}

Json failure_json(const Failure& f)
{
    Json j;
    j["check"] = f.check;
    j["inputs"] = f.inputs;
    j["expected"] = f.expected;
    j["got"] = f.got;
    return j;
}

}  // namespace

template <Field F>
Json scalar_json(const F& field, const typename F::Elem& value)
{
    if constexpr (std::is_same_v<F, Rationals>)
        return field.format(value);
    else
        return value;
}

template <Field F>
typename F::Elem parse_scalar(const F& field, const Json& j, const std::string& where)
{
    try {
        if (j.is_number_integer())
            return field.from_int(j.get<long>());
        if (j.is_string())
            return field.parse(j.get<std::string>());
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    } catch (const DomainError& e) {
        throw InputError(where + ": " + e.what());
    }
    throw InputError(where + ": scalar must be a \"num/den\" string or an integer");
}

template <Field F>
Json chain_json(const Context<F>& ctx, const ChainVector<F>& x)
{
    const TriangleLayout& lay = ctx.chain_layout(x.degree);
    Json coords = Json::array();
    for (const auto& e : x.coords.entries) {
        auto t = lay.unpack(e.index);
        Json c;
        c["a"] = t.a;
        c["b"] = t.b;
        c["c"] = scalar_json(ctx.field(), e.value);
        coords.push_back(std::move(c));
    }
    Json j;
    j["degree"] = x.degree;
    j["coords"] = std::move(coords);
    return j;
}

template <Field F>
ChainVector<F> parse_chain(const Context<F>& ctx, std::string_view text)
{
    Json doc = parse_document(text, "chain");
    const int p = parse_degree(doc, "chain");
    const TriangleLayout& lay = ctx.chain_layout(p);
    const Json& coords = require(doc, "coords", "chain");
    if (!coords.is_array())
        throw InputError("chain.coords: expected an array");
    VecBuilder<F> v;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        const std::string where = "chain.coords[" + std::to_string(k) + "]";
        TriangleIndex t;
        t.a = parse_indices(require(coords[k], "a", where), static_cast<std::size_t>(p + 1), ctx.dim_a(), where + ".a");
        t.b = parse_indices(require(coords[k], "b", where), static_cast<std::size_t>(pair_count(p + 1)), ctx.dim_b(),
                            where + ".b");
        v.add(lay.pack(t), parse_scalar(ctx.field(), require(coords[k], "c", where), where + ".c"));
    }
    return {p, v.finish(ctx.field())};
}

template <Field F>
Json cochain_json(const Context<F>& ctx, const Cochain<F>& f)
{
    const F& field = ctx.field();
    Json matrix = Json::array();
    for (Index i = 0; i < f.values.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < f.values.cols(); ++j) {
            const auto* v = f.values.col(j).find(i);
            row.push_back(scalar_json(field, v ? *v : field.zero()));
        }
        matrix.push_back(std::move(row));
    }
    Json j;
    j["degree"] = f.degree;
    j["matrix"] = std::move(matrix);
    return j;
}

template <Field F>
Cochain<F> parse_cochain(const Context<F>& ctx, std::string_view text)
{
    Json doc = parse_document(text, "cochain");
    const int n = parse_degree(doc, "cochain");
    const Json& matrix = require(doc, "matrix", "cochain");
    const Index rows = static_cast<Index>(ctx.dim_a());
    const Index cols = ctx.input_dim(n);
    if (!matrix.is_array() || matrix.size() != rows)
        throw InputError("cochain.matrix: expected " + std::to_string(rows) + " rows");
    std::vector<VecBuilder<F>> builders(cols);
    for (Index i = 0; i < rows; ++i) {
        const std::string where = "cochain.matrix[" + std::to_string(i) + "]";
        if (!matrix[i].is_array() || matrix[i].size() != cols)
            throw InputError(where + ": expected " + std::to_string(cols) + " entries");
        for (Index j = 0; j < cols; ++j)
            builders[j].add(i, parse_scalar(ctx.field(), matrix[i][j], where + "[" + std::to_string(j) + "]"));
    }
    Cochain<F> f = zero_cochain(ctx, n);
    for (Index j = 0; j < cols; ++j)
        f.values.set_col(j, builders[j].finish(ctx.field()));
    return f;
}

template <Field F>
Json homology_json(const Context<F>& ctx, const HomologyReport<F>& report, bool with_representatives)
{
    Json j;
    j["triple"] = report.triple;
    j["field"] = report.field;
    j["kind"] = report.cohomology ? "cohomology" : "homology";
    j["betti"] = report.betti();
    Json degrees = Json::array();
    for (const auto& d : report.degrees) {
        Json e;
        e["degree"] = d.degree;
        e["dim"] = d.dim;
        e["kernel_dim"] = d.kernel_dim;
        e["rank_in"] = d.rank_in;
        e["rank_out"] = d.rank_out;
        e["betti"] = d.betti;
        if (with_representatives) {
            Json reps = Json::array();
            for (const auto& v : d.representatives)
                reps.push_back(report.cohomology ? cochain_json(ctx, unflatten(ctx, d.degree, v))
                                                 : chain_json(ctx, ChainVector<F>{d.degree, v}));
            e["representatives"] = std::move(reps);
        }
        degrees.push_back(std::move(e));
    }
    j["degrees"] = std::move(degrees);
    return j;
}

Json suite_json(const SuiteResult& r)
{
    Json j;
    j["suite"] = r.suite;
    j["triple"] = r.triple;
    j["field"] = r.field;
    j["max_degree"] = r.bounds.max_degree;
    j["max_cochain_degree"] = r.bounds.max_cochain_degree;
    j["seed"] = r.bounds.seed;
    j["mutation"] = r.mutation;
    j["passed"] = r.passed();
    j["checks"] = r.checks;
    j["failure_count"] = r.failure_count;
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back(failure_json(f));
    j["failures"] = std::move(failures);
    j["notes"] = r.notes;
    return j;
}

Json bv_json(const BvReport& r)
{
    Json j;
    j["triple"] = r.triple;
    j["field"] = r.field;
    j["class_degree"] = r.class_degree;
    j["max_degree"] = r.max_degree;
    j["status"] = r.status;
    j["applicable"] = r.applicable;
    j["failing_degree"] = r.failing_degree ? Json(*r.failing_degree) : Json(nullptr);
    j["b_class_trivial"] = r.b_class_trivial;
    Json degrees = Json::array();
    for (const auto& d : r.degrees) {
        Json e;
        e["degree"] = d.degree;
        e["cohomology_dim"] = d.cohomology_dim;
        e["homology_dim"] = d.homology_dim;
        e["rank"] = d.rank;
        e["bijective"] = d.bijective;
        e["delta"] = d.delta;
        degrees.push_back(std::move(e));
    }
    j["theta"] = std::move(degrees);
    j["delta_zero"] = r.delta_zero;
    j["delta_squared_zero"] = r.delta_squared_zero;
    j["identity_checks"] = r.identity_checks;
    j["identity_failures"] = r.identity_failures;
    j["failures"] = r.failures;
    return j;
}

Json validation_json(const ValidationReport& r)
{
    Json j;
    j["ok"] = r.ok();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["witness"] = c.witness;
        e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

#define SHC_SERIALIZE_INSTANTIATE(F)                                                     \
    template Json scalar_json(const F&, const typename F::Elem&);                        \
    template typename F::Elem parse_scalar(const F&, const Json&, const std::string&);   \
    template Json chain_json(const Context<F>&, const ChainVector<F>&);                  \
    template ChainVector<F> parse_chain(const Context<F>&, std::string_view);            \
    template Json cochain_json(const Context<F>&, const Cochain<F>&);                    \
    template Cochain<F> parse_cochain(const Context<F>&, std::string_view);              \
    template Json homology_json(const Context<F>&, const HomologyReport<F>&, bool);

SHC_SERIALIZE_INSTANTIATE(Rationals)
SHC_SERIALIZE_INSTANTIATE(PrimeField)

}  // namespace shc
