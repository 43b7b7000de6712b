#pragma once

#include "particover/group.hpp"

#include <string>
#include <vector>

namespace particover {

enum class Family {
    Cyclic,            // C<n>
    ElementaryAbelian, // C<p>^<n>
    Dihedral,          // D<order>
    Symmetric,         // S<n>
    Alternating,       // A<n>
    PSL2,              // PSL2(<q>)
    PGL2,              // PGL2(<q>)
    AGL1,              // AGL1(<q>,<d>)
    Suzuki,            // Sz(<q>)
    Product,           // left-associative " x " products, flattened
};

// Chooses between the projective special and full projective linear group in
// operations parameterized by q.
enum class LinearVariant { PSL, PGL };

// A structural name for a finite group. Closed-form results dispatch on the
// name; nothing here ever detects isomorphisms between different names.
struct GroupSpec {
    Family family = Family::Cyclic;
    long long a = 0; // n | p | order | n | n | q | q | q | q
    long long b = 0; // second parameter: exponent for C<p>^<n>, d for AGL1
    std::vector<GroupSpec> factors; // Product only, in written order

    std::string to_string() const;
    // Arithmetic only, no group construction; throws std::overflow_error when
    // the order does not fit in 64 bits (very large Suzuki parameters).
    long long order() const;
    // True when an element-level group can be constructed: no Suzuki factor
    // and order within the engine cap.
    bool buildable() const;
    Group build() const; // throws std::invalid_argument when not buildable
    bool operator==(const GroupSpec& o) const;
};

// Parses the case-sensitive grammar
//   C<n> | C<p>^<n> | D<2n> | S<n> | A<n> | PSL2(<q>) | PGL2(<q>)
//   | AGL1(<q>,<d>) | Sz(<q>) | <spec> x <spec>
// Syntax errors throw std::invalid_argument naming the 1-based position;
// semantically bad parameters throw std::invalid_argument with the reason.
GroupSpec parse_spec(const std::string& text);

} // namespace particover
