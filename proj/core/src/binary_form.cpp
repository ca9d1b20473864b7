#include "sextic/binary_form.hpp"

namespace sextic {

template class BinaryForm<Rational>;
template class BinaryForm<CycNum>;
template class BinaryForm<ParamPoly>;
template class BinaryForm<Complex>;

}  // namespace sextic
