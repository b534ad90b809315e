#include "shc/linalg.hpp"

namespace shc {

template class Echelon<Rationals>;
template class Echelon<PrimeField>;

}  // namespace shc
