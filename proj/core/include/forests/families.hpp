#ifndef FORESTS_FAMILIES_HPP
#define FORESTS_FAMILIES_HPP

#include <string>

#include "forests/graph.hpp"
#include "forests/rational.hpp"

namespace forests {

enum class Family { complete, cycle, wheel, torus, house };

struct FamilySpec {
    Family family;
    int n;
};

Family family_from_name(const std::string& name);
std::string family_name(Family f);

// Canonical generators: wheel hub is the last vertex, torus vertices are
// row-major on the n x n grid. Wheel generation needs n >= 3; the n = 1, 2
// wheels exist only as closed-form table rows.
Graph build(const FamilySpec& spec);

struct ClosedForm {
    Int kappa;
    Int kappa2;
};

// Exact closed-form counts. Wheel values are evaluated through Lucas and
// Fibonacci recurrences: kappa(W_n) = L_{2n} - 2, kappa2(W_n) = n F_{2n-1}.
// The torus has no implemented closed form.
ClosedForm closed_form(const FamilySpec& spec);

Int fibonacci(int k);
Int lucas(int k);

}  // namespace forests

#endif
