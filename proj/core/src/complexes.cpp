#include "shc/complexes.hpp"

#include <cstdlib>
#include <limits>

namespace shc {

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("SHC_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return 1'000'000;
}

std::string Mutation::describe() const
{
    switch (kind) {
    case Kind::None:
        return "none";
    case Kind::BoundaryTerm:
        return "boundary term " + std::to_string(index) + " sign flipped";
    case Kind::CyclicSign:
        return "cyclic operator negated";
    case Kind::CompSlot:
        return "composition slot " + std::to_string(index) + " negated";
    }
    return "unknown";
}

int pair_count(int rows) { return rows * (rows - 1) / 2; }

int pair_slot(int rows, int s, int t) { return s * rows - s * (s + 1) / 2 + (t - s - 1); }

mpz_class triangle_count(int dim_a, int dim_b, int rows)
{
    mpz_class a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(dim_a), static_cast<unsigned long>(rows));
    mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(dim_b), static_cast<unsigned long>(pair_count(rows)));
    return a * b;
}

namespace {

std::uint64_t checked(const mpz_class& dim, std::uint64_t budget, const std::string& what,
                      const std::string& formula)
{
    const std::uint64_t cap = std::min<std::uint64_t>(budget, std::numeric_limits<Index>::max());
    if (dim > mpz_class(std::to_string(cap), 10))
        throw BudgetExceeded(what + " has dimension " + dim.get_str() + " = " + formula + ", exceeding the basis budget " +
                                 std::to_string(budget),
                             dim.get_str());
    return std::stoull(dim.get_str());
}

}  // namespace

std::uint64_t chain_dim(const TripleSpec& t, int p, std::uint64_t budget)
{
    if (p < 0)
        throw DomainError("chain degree must be >= 0");
    std::string formula = std::to_string(t.A.dim) + "^" + std::to_string(p + 1) + " * " + std::to_string(t.B.dim) +
                          "^" + std::to_string(pair_count(p + 1));
    return checked(triangle_count(t.A.dim, t.B.dim, p + 1), budget, "C_" + std::to_string(p), formula);
}

std::uint64_t cochain_dim(const TripleSpec& t, int n, std::uint64_t budget)
{
    if (n < 0)
        throw DomainError("cochain degree must be >= 0");
    std::string formula = std::to_string(t.A.dim) + "^" + std::to_string(n) + " * " + std::to_string(t.B.dim) + "^" +
                          std::to_string(pair_count(n)) + " * " + std::to_string(t.A.dim);
    return checked(triangle_count(t.A.dim, t.B.dim, n) * t.A.dim, budget, "C^" + std::to_string(n), formula);
}

TriangleIndex extract_subtriangle(const TriangleIndex& x, int i, int k)
{
    const int rows = x.rows();
    if (static_cast<int>(x.b.size()) != pair_count(rows))
        throw DomainError("extract_subtriangle: malformed triangle");
    if (i < 0 || k >= rows || i > k)
        throw DomainError("extract_subtriangle: rows " + std::to_string(i) + ".." + std::to_string(k) +
                          " out of range for " + std::to_string(rows) + " rows");
    TriangleIndex out;
    for (int r = i; r <= k; ++r)
        out.a.push_back(x.a[r]);
    for (int s = i; s <= k; ++s)
        for (int t = s + 1; t <= k; ++t)
            out.b.push_back(x.b[pair_slot(rows, s, t)]);
    return out;
}

TriangleLayout::TriangleLayout(int dim_a, int dim_b, int rows) : dim_a_(dim_a), dim_b_(dim_b), rows_(rows)
{
    mpz_class total = triangle_count(dim_a, dim_b, rows);
    if (total > mpz_class(std::to_string(std::numeric_limits<Index>::max()), 10))
        throw BudgetExceeded("triangle basis with " + std::to_string(rows) + " rows has dimension " + total.get_str(),
                             total.get_str());
    size_ = static_cast<Index>(total.get_ui());
    Index w = 1;
    for (int k = 0; k < rows; ++k) {
        a_weight_.push_back(w);
        w *= static_cast<Index>(dim_a);
    }
    for (int q = 0; q < pair_count(rows); ++q) {
        b_weight_.push_back(w);
        w *= static_cast<Index>(dim_b);
    }
}

Index TriangleLayout::pack(const TriangleIndex& t) const
{
    if (t.rows() != rows_ || static_cast<int>(t.b.size()) != pairs())
        throw DomainError("pack: triangle has the wrong shape for this layout");
    Index idx = 0;
    for (int k = 0; k < rows_; ++k) {
        if (t.a[k] < 0 || t.a[k] >= dim_a_)
            throw DomainError("pack: A index out of range");
        idx += static_cast<Index>(t.a[k]) * a_weight_[k];
    }
    for (int q = 0; q < pairs(); ++q) {
        if (t.b[q] < 0 || t.b[q] >= dim_b_)
            throw DomainError("pack: B index out of range");
        idx += static_cast<Index>(t.b[q]) * b_weight_[q];
    }
    return idx;
}

TriangleIndex TriangleLayout::unpack(Index idx) const
{
    if (idx >= size_)
        throw DomainError("unpack: index out of range");
    TriangleIndex t;
    t.a.resize(rows_);
    t.b.resize(pairs());
    decode(idx, t.a.data(), t.b.data());
    return t;
}

void TriangleLayout::decode(Index idx, int* a, int* b) const
{
    for (int k = 0; k < rows_; ++k) {
        a[k] = static_cast<int>(idx % dim_a_);
        idx /= dim_a_;
    }
    const int np = pairs();
    for (int q = 0; q < np; ++q) {
        b[q] = static_cast<int>(idx % dim_b_);
        idx /= dim_b_;
    }
}

template class Context<Rationals>;
template class Context<PrimeField>;

}  // namespace shc
