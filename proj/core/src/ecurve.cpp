#include "sextic/ecurve.hpp"

namespace sextic {

template class RationalFunction<Rational>;
template class RationalFunction<CycNum>;

}  // namespace sextic
