#ifndef HEEGNER1_FORMS_HPP
#define HEEGNER1_FORMS_HPP

#include "heegner1/quadfield.hpp"

#include <vector>

namespace heegner1 {

// reduced primitive positive definite form a x^2 + b xy + c y^2
struct QuadFormClass {
    long a, b, c;
    bool operator==(const QuadFormClass& o) const { return a == o.a && b == o.b && c == o.c; }
};

std::vector<QuadFormClass> reducedForms(long disc);
// independent enumeration used as a cross-check
std::vector<QuadFormClass> reducedFormsAltScan(long disc);
long classNumber(long disc);

bool isPrincipal(const QuadFormClass& q);
QuadFormClass principalForm(long disc);

} // namespace heegner1

#endif
