#pragma once

// JSON forms of chains, cochains and reports. Scalars are "num/den" strings
// over Q and integers over F_p. Object keys are emitted in a fixed order so
// that equal inputs give byte-identical documents.

#include <string_view>

#include <json.hpp>

#include "shc/bv_probe.hpp"
#include "shc/triple.hpp"
#include "shc/verify.hpp"

namespace shc {

using Json = nlohmann::ordered_json;

template <Field F>
Json scalar_json(const F& field, const typename F::Elem& value);
template <Field F>
typename F::Elem parse_scalar(const F& field, const Json& j, const std::string& where);

/// {"degree": p, "coords": [{"a": [...], "b": [...], "c": scalar}]}
template <Field F>
Json chain_json(const Context<F>& ctx, const ChainVector<F>& x);
template <Field F>
ChainVector<F> parse_chain(const Context<F>& ctx, std::string_view text);

/// {"degree": n, "matrix": [[scalars]]}, dim A rows, one column per input basis element.
template <Field F>
Json cochain_json(const Context<F>& ctx, const Cochain<F>& f);
template <Field F>
Cochain<F> parse_cochain(const Context<F>& ctx, std::string_view text);

template <Field F>
Json homology_json(const Context<F>& ctx, const HomologyReport<F>& report, bool with_representatives);

Json suite_json(const SuiteResult& r);
Json bv_json(const BvReport& r);
Json validation_json(const ValidationReport& r);

#define SHC_SERIALIZE_EXTERN(F)                                                                  \
    extern template Json scalar_json(const F&, const typename F::Elem&);                         \
    extern template typename F::Elem parse_scalar(const F&, const Json&, const std::string&);    \
    extern template Json chain_json(const Context<F>&, const ChainVector<F>&);                   \
    extern template ChainVector<F> parse_chain(const Context<F>&, std::string_view);             \
    extern template Json cochain_json(const Context<F>&, const Cochain<F>&);                     \
    extern template Cochain<F> parse_cochain(const Context<F>&, std::string_view);               \
    extern template Json homology_json(const Context<F>&, const HomologyReport<F>&, bool);

SHC_SERIALIZE_EXTERN(Rationals)
SHC_SERIALIZE_EXTERN(PrimeField)
#undef SHC_SERIALIZE_EXTERN

}  // namespace shc
