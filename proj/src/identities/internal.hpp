#ifndef QPARTID_IDENTITIES_INTERNAL_HPP
#define QPARTID_IDENTITIES_INTERNAL_HPP

#include <qpartid/identities.hpp>

namespace qpartid::detail
{

// Right side q^{a C(n,2)} [p+n, p]_{q^c} (which 1, 2) or q^{a C(n,2)} [p, n]_{q^c} (3, 4).
IntPoly resdbl_rhs(int which, const Params &v);

// 1..4 for "resdbl1".."resdbl4", 0 otherwise.
int resdbl_index(std::string_view id);

} // namespace qpartid::detail

#endif
