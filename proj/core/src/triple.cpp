#include "shc/triple.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <sstream>

namespace shc {

using nlohmann::json;

std::string FieldConfig::name() const
{
    return kind == Kind::Rational ? std::string("Q") : "Fp(" + std::to_string(prime) + ")";
}

std::vector<mpq_class> multiply(const AlgebraSpec& alg, const std::vector<mpq_class>& x,
                                const std::vector<mpq_class>& y)
{
    if (static_cast<int>(x.size()) != alg.dim || static_cast<int>(y.size()) != alg.dim)
        throw DomainError("multiply: expected vectors of length " + std::to_string(alg.dim));
    std::vector<mpq_class> out(alg.dim, 0);
    for (int i = 0; i < alg.dim; ++i) {
        if (sgn(x[i]) == 0)
            continue;
        for (int j = 0; j < alg.dim; ++j) {
            if (sgn(y[j]) == 0)
                continue;
            mpq_class c = x[i] * y[j];
            for (int k = 0; k < alg.dim; ++k)
                out[k] += c * alg.mult[i][j][k];
        }
    }
    return out;
}

bool ValidationReport::ok() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

std::vector<ValidationCheck> ValidationReport::failures() const
{
    std::vector<ValidationCheck> out;
    for (const auto& c : checks)
        if (!c.passed)
            out.push_back(c);
    return out;
}

template <Field F>
TypedTriple<F> make_typed(const TripleSpec& t, F field)
{
    auto convert = [&](const std::vector<mpq_class>& v) {
        VecBuilder<F> b;
        for (std::size_t k = 0; k < v.size(); ++k)
            b.add(static_cast<Index>(k), field.from_rational(v[k]));
        return b.finish(field);
    };
    auto algebra = [&](const AlgebraSpec& a) {
        TypedAlgebra<F> out;
        out.dim = a.dim;
        out.unit = convert(a.unit);
        out.table.reserve(static_cast<std::size_t>(a.dim) * a.dim);
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j)
                out.table.push_back(convert(a.mult[i][j]));
        return out;
    };
    TypedTriple<F> out{field, algebra(t.A), algebra(t.B), {}};
    for (int j = 0; j < t.B.dim; ++j) {
        std::vector<mpq_class> col(t.A.dim);
        for (int i = 0; i < t.A.dim; ++i)
            col[i] = t.eps[i][j];
        out.eps_images.push_back(convert(col));
    }
    return out;
}

template TypedTriple<Rationals> make_typed(const TripleSpec&, Rationals);
template TypedTriple<PrimeField> make_typed(const TripleSpec&, PrimeField);

namespace {

template <Field F>
std::string describe(const F& f, const SparseVec<F>& v)
{
    if (v.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& e : v.entries) {
        if (!first)
            os << " + ";
        first = false;
        os << f.format(e.value) << "*e" << e.index;
    }
    return os.str();
}

template <Field F>
void check_algebra(const F& f, const TypedAlgebra<F>& alg, const std::string& label, bool commutative,
                   ValidationReport& report)
{
    const int d = alg.dim;
    auto e = [&](int i) { return SparseVec<F>::unit(f, static_cast<Index>(i)); };

    ValidationCheck assoc{label + ".associativity", true, {}, {}};
    for (int i = 0; i < d && assoc.passed; ++i)
        for (int j = 0; j < d && assoc.passed; ++j)
            for (int k = 0; k < d && assoc.passed; ++k) {
                auto lhs = alg.multiply(f, alg.product(i, j), e(k));
                auto rhs = alg.multiply(f, e(i), alg.product(j, k));
                if (!(lhs == rhs)) {
                    assoc.passed = false;
                    assoc.witness = {i, j, k};
                    assoc.detail = "(e" + std::to_string(i) + "e" + std::to_string(j) + ")e" + std::to_string(k) +
                                   " = " + describe(f, lhs) + " but e" + std::to_string(i) + "(e" +
                                   std::to_string(j) + "e" + std::to_string(k) + ") = " + describe(f, rhs);
                }
            }
    report.checks.push_back(assoc);

    ValidationCheck unit{label + ".unit", true, {}, {}};
    for (int i = 0; i < d && unit.passed; ++i) {
        auto left = alg.multiply(f, alg.unit, e(i));
        auto right = alg.multiply(f, e(i), alg.unit);
        if (!(left == e(i)) || !(right == e(i))) {
            unit.passed = false;
            unit.witness = {i};
            unit.detail = "1*e" + std::to_string(i) + " = " + describe(f, left) + ", e" + std::to_string(i) +
                          "*1 = " + describe(f, right);
        }
    }
    report.checks.push_back(unit);

    if (commutative) {
        ValidationCheck comm{label + ".commutativity", true, {}, {}};
        for (int i = 0; i < d && comm.passed; ++i)
            for (int j = i + 1; j < d && comm.passed; ++j)
                if (!(alg.product(i, j) == alg.product(j, i))) {
                    comm.passed = false;
                    comm.witness = {i, j};
                    comm.detail = "e" + std::to_string(i) + "e" + std::to_string(j) + " != e" + std::to_string(j) +
                                  "e" + std::to_string(i);
                }
        report.checks.push_back(comm);
    }
}

template <Field F>
ValidationReport validate_typed(const TypedTriple<F>& t)
{
    const F& f = t.field;
    ValidationReport report;
    check_algebra(f, t.A, "A", false, report);
    check_algebra(f, t.B, "B", true, report);

    ValidationCheck unital{"eps.unital", true, {}, {}};
    auto image_of_unit = t.eps(t.B.unit);
    if (!(image_of_unit == t.A.unit)) {
        unital.passed = false;
        unital.detail = "eps(1_B) = " + describe(f, image_of_unit) + " != 1_A = " + describe(f, t.A.unit);
    }
    report.checks.push_back(unital);

    ValidationCheck morphism{"eps.multiplicative", true, {}, {}};
    for (int i = 0; i < t.B.dim && morphism.passed; ++i)
        for (int j = 0; j < t.B.dim && morphism.passed; ++j) {
            auto lhs = t.eps(t.B.product(i, j));
            auto rhs = t.A.multiply(f, t.eps_images[i], t.eps_images[j]);
            if (!(lhs == rhs)) {
                morphism.passed = false;
                morphism.witness = {i, j};
                morphism.detail = "eps(b" + std::to_string(i) + "b" + std::to_string(j) + ") = " + describe(f, lhs) +
                                  " but eps(b" + std::to_string(i) + ")eps(b" + std::to_string(j) +
                                  ") = " + describe(f, rhs);
            }
        }
    report.checks.push_back(morphism);

    ValidationCheck central{"eps.central", true, {}, {}};
    for (int j = 0; j < t.B.dim && central.passed; ++j)
        for (int i = 0; i < t.A.dim && central.passed; ++i) {
            auto a = SparseVec<F>::unit(f, static_cast<Index>(i));
            auto left = t.A.multiply(f, t.eps_images[j], a);
            auto right = t.A.multiply(f, a, t.eps_images[j]);
            if (!(left == right)) {
                central.passed = false;
                central.witness = {j, i};
                central.detail = "eps(b" + std::to_string(j) + ")*a" + std::to_string(i) + " = " +
                                 describe(f, left) + " but a" + std::to_string(i) + "*eps(b" + std::to_string(j) +
                                 ") = " + describe(f, right);
            }
        }
    report.checks.push_back(central);
    return report;
}

mpq_class parse_scalar(const json& j, const std::string& where)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return mpq_class(mpz_class(std::to_string(j.get<long long>()), 10));
    throw InputError(where + ": scalar must be a \"num/den\" string or an integer");
}

const json& require(const json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key))
        throw InputError(where + ": missing \"" + key + "\"");
    return obj.at(key);
}

std::vector<mpq_class> parse_vector(const json& j, std::size_t len, const std::string& where)
{
    if (!j.is_array() || j.size() != len)
        throw InputError(where + ": expected an array of " + std::to_string(len) + " scalars");
    std::vector<mpq_class> out;
    for (std::size_t k = 0; k < len; ++k)
        out.push_back(parse_scalar(j[k], where + "[" + std::to_string(k) + "]"));
    return out;
}

AlgebraSpec parse_algebra(const json& j, const std::string& where)
{
    AlgebraSpec a;
    const json& dim = require(j, "dim", where);
    if (!dim.is_number_integer() || dim.get<long long>() < 1)
        throw InputError(where + ".dim: expected a positive integer");
    a.dim = static_cast<int>(dim.get<long long>());
    const std::size_t d = static_cast<std::size_t>(a.dim);
    a.unit = parse_vector(require(j, "unit", where), d, where + ".unit");
    const json& mult = require(j, "mult", where);
    if (!mult.is_array() || mult.size() != d)
        throw InputError(where + ".mult: expected a dim x dim x dim array");
    a.mult.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (!mult[i].is_array() || mult[i].size() != d)
            throw InputError(where + ".mult[" + std::to_string(i) + "]: expected dim entries");
        for (std::size_t k = 0; k < d; ++k)
            a.mult[i].push_back(parse_vector(mult[i][k], d,
                                             where + ".mult[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    }
    return a;
}

json scalar_json(const mpq_class& q, const FieldConfig& field)
{
    if (field.kind == FieldConfig::Kind::Prime && q.get_den() == 1 && q.get_num().fits_slong_p())
        return q.get_num().get_si();
    return format_rational(q);
}

json algebra_json(const AlgebraSpec& a, const FieldConfig& field)
{
    json unit = json::array();
    for (const auto& u : a.unit)
        unit.push_back(scalar_json(u, field));
    json mult = json::array();
    for (const auto& row : a.mult) {
        json r = json::array();
        for (const auto& v : row) {
            json vv = json::array();
            for (const auto& c : v)
                vv.push_back(scalar_json(c, field));
            r.push_back(vv);
        }
        mult.push_back(r);
    }
    return json{{"dim", a.dim}, {"unit", unit}, {"mult", mult}};
}

using Table = std::map<std::pair<int, int>, std::vector<std::pair<int, long>>>;

AlgebraSpec algebra_from(int dim, std::vector<long> unit, const Table& products)
{
    AlgebraSpec a;
    a.dim = dim;
    for (long u : unit)
        a.unit.emplace_back(u);
    a.mult.assign(dim, std::vector<std::vector<mpq_class>>(dim, std::vector<mpq_class>(dim, 0)));
    for (const auto& [ij, terms] : products)
        for (const auto& [k, c] : terms)
            a.mult[ij.first][ij.second][k] = c;
    return a;
}

AlgebraSpec ground_field() { return algebra_from(1, {1}, {{{0, 0}, {{0, 1}}}}); }

// basis {1, x}, x^2 = 0
AlgebraSpec dual_numbers()
{
    return algebra_from(2, {1, 0}, {{{0, 0}, {{0, 1}}}, {{0, 1}, {{1, 1}}}, {{1, 0}, {{1, 1}}}});
}

// basis {E11, E22, E12}
AlgebraSpec upper_triangular()
{
    return algebra_from(3, {1, 1, 0},
                        {{{0, 0}, {{0, 1}}}, {{1, 1}, {{1, 1}}}, {{0, 2}, {{2, 1}}}, {{2, 1}, {{2, 1}}}});
}

// basis {1, g}, g^2 = 1
AlgebraSpec group_algebra_z2()
{
    return algebra_from(2, {1, 0},
                        {{{0, 0}, {{0, 1}}}, {{0, 1}, {{1, 1}}}, {{1, 0}, {{1, 1}}}, {{1, 1}, {{0, 1}}}});
}

std::vector<std::vector<mpq_class>> unit_inclusion(const AlgebraSpec& A)
{
    std::vector<std::vector<mpq_class>> eps(A.dim, std::vector<mpq_class>(1, 0));
    for (int i = 0; i < A.dim; ++i)
        eps[i][0] = A.unit[i];
    return eps;
}

}  // namespace

ValidationReport validate(const TripleSpec& t)
{
    if (t.field.kind == FieldConfig::Kind::Prime)
        return validate_typed(make_typed(t, PrimeField(t.field.prime)));
    return validate_typed(make_typed(t, Rationals{}));
}

TripleSpec load_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw InputError("triple document must be a JSON object");

    TripleSpec t;
    const json& field = require(doc, "field", "triple");
    const json& type = require(field, "type", "field");
    if (type == "Q") {
        t.field = FieldConfig::rationals();
    } else if (type == "Fp") {
        const json& p = require(field, "p", "field");
        if (!p.is_number_integer() || p.get<long long>() < 2)
            throw InputError("field.p: expected an integer >= 2");
        auto prime = p.get<long long>();
        if (prime >= (1ll << 31) || !is_prime(static_cast<std::uint64_t>(prime)))
            throw InputError("field.p: modulus " + std::to_string(prime) + " is not prime");
        t.field = FieldConfig::prime_field(static_cast<std::uint32_t>(prime));
    } else {
        throw InputError("field.type: expected \"Q\" or \"Fp\"");
    }
    t.A = parse_algebra(require(doc, "A", "triple"), "A");
    t.B = parse_algebra(require(doc, "B", "triple"), "B");
    const json& eps = require(doc, "epsilon", "triple");
    if (!eps.is_array() || eps.size() != static_cast<std::size_t>(t.A.dim))
        throw InputError("epsilon: expected a dim(A) x dim(B) array");
    for (int i = 0; i < t.A.dim; ++i)
        t.eps.push_back(parse_vector(eps[i], t.B.dim, "epsilon[" + std::to_string(i) + "]"));
    if (doc.contains("name") && doc["name"].is_string())
        t.name = doc["name"].get<std::string>();
    return t;
}

std::string to_json(const TripleSpec& t)
{
    nlohmann::ordered_json doc;
    if (!t.name.empty())
        doc["name"] = t.name;
    if (t.field.kind == FieldConfig::Kind::Rational)
        doc["field"] = {{"type", "Q"}};
    else
        doc["field"] = {{"type", "Fp"}, {"p", t.field.prime}};
    doc["A"] = algebra_json(t.A, t.field);
    doc["B"] = algebra_json(t.B, t.field);
    json eps = json::array();
    for (const auto& row : t.eps) {
        json r = json::array();
        for (const auto& c : row)
            r.push_back(scalar_json(c, t.field));
        eps.push_back(r);
    }
    doc["epsilon"] = eps;
    return doc.dump(2);
}

std::vector<std::string> builtin_names() { return {"T_triv", "T_dual", "T_full", "T_u2", "T_z2"}; }

TripleSpec builtin(std::string_view name, FieldConfig field)
{
    TripleSpec t;
    t.name = std::string(name);
    t.field = field;
    if (name == "T_triv") {
        t.A = ground_field();
        t.B = ground_field();
        t.eps = {{1}};
    } else if (name == "T_dual") {
        t.A = dual_numbers();
        t.B = ground_field();
        t.eps = unit_inclusion(t.A);
    } else if (name == "T_full") {
        t.A = dual_numbers();
        t.B = dual_numbers();
        t.eps = {{1, 0}, {0, 1}};
    } else if (name == "T_u2") {
        t.A = upper_triangular();
        t.B = ground_field();
        t.eps = unit_inclusion(t.A);
    } else if (name == "T_z2") {
        t.A = group_algebra_z2();
        t.B = ground_field();
        t.eps = unit_inclusion(t.A);
    } else {
        throw InputError("unknown builtin triple '" + std::string(name) + "'");
    }
    return t;
}

}  // namespace shc
