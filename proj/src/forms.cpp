#include "heegner1/forms.hpp"

#include "heegner1/errors.hpp"

#include <algorithm>
#include <numeric>

namespace heegner1 {

namespace {

void checkDisc(long disc) {
    if (disc >= 0) throw InvalidD("discriminant must be negative");
    long r = ((disc % 4) + 4) % 4;
    if (r != 0 && r != 1) throw InvalidD("discriminant must be 0 or 1 mod 4");
}

bool isReducedPrimitive(long a, long b, long c) {
    if (a <= 0) return false;
    long ab = std::abs(b);
    if (!(ab <= a && a <= c)) return false;
    if ((ab == a || a == c) && b < 0) return false;
    return std::gcd(std::gcd(a, b), c) == 1;
}

void sortForms(std::vector<QuadFormClass>& v) {
    std::sort(v.begin(), v.end(), [](const QuadFormClass& p, const QuadFormClass& q) {
        if (p.a != q.a) return p.a < q.a;
        if (p.b != q.b) return p.b < q.b;
        return p.c < q.c;
    });
}

} // namespace

std::vector<QuadFormClass> reducedForms(long disc) {
    checkDisc(disc);
    std::vector<QuadFormClass> out;
    for (long a = 1; 3 * a * a <= -disc; ++a) {
        for (long b = -a; b <= a; ++b) {
            long num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            long c = num / (4 * a);
            if (isReducedPrimitive(a, b, c))
                out.push_back({a, b, c});
        }
    }
    sortForms(out);
    return out;
}

std::vector<QuadFormClass> reducedFormsAltScan(long disc) {
    checkDisc(disc);
    std::vector<QuadFormClass> out;
    long parity = ((disc % 2) + 2) % 2;
    long bMax = 0;
    while (3 * (bMax + 1) * (bMax + 1) <= -disc) ++bMax;
    for (long b = bMax; b >= 0; --b) {
        if ((b % 2 + 2) % 2 != parity) continue;
        long prod = (b * b - disc) / 4;
        for (long a = std::max(b, 1L); a * a <= prod; ++a) {
            if (prod % a != 0) continue;
            long c = prod / a;
            for (long sb : {b, -b}) {
                if (isReducedPrimitive(a, sb, c)) {
                    QuadFormClass f{a, sb, c};
                    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
                }
            }
        }
    }
    sortForms(out);
    return out;
}

long classNumber(long disc) { return static_cast<long>(reducedForms(disc).size()); }

bool isPrincipal(const QuadFormClass& q) { return q.a == 1; }

QuadFormClass principalForm(long disc) {
    checkDisc(disc);
    long r = ((disc % 4) + 4) % 4;
    if (r == 0) return {1, 0, -disc / 4};
    return {1, 1, (1 - disc) / 4};
}

} // namespace heegner1
