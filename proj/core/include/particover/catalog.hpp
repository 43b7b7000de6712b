#pragma once

#include "particover/groupspec.hpp"

#include <vector>

namespace particover {

// The benchmark family: every cyclic group, elementary abelian group (rank
// at least 2), dihedral group, S3/S4/A4, and affine Frobenius group AGL1(q,d)
// of order at most max_order, plus every direct product of two of those
// (unordered, same-base pairs included) whose order still fits. Deduplicated
// by canonical spec string, sorted by (order, spec). max_order must be
// positive and within the element-level engine cap.
std::vector<GroupSpec> catalog_specs(long long max_order);

// The catalog members whose built groups are solvable and noncyclic. Note
// the filter is on the group, not the name: e.g. "C2 x C3" is dropped as
// cyclic even though its spec is a product.
std::vector<GroupSpec> solvable_noncyclic_catalog(long long max_order);

} // namespace particover
