#pragma once

#include <string>
#include <vector>

#include "hzeta/moebius.hpp"

namespace hzeta {

enum class SystemKind { P, R, I, IJplus, IJminus };

struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool overlaps(const Interval& o) const { return lo < o.hi && o.lo < hi; }
    bool contains(double x, double tol = 0.0) const { return x > lo + tol && x < hi - tol; }
    double len() const { return hi - lo; }
};

// One branch of the coded system. Parabolic families are stored once with the
// step element; the n-th member acts by step^n on domain base + n*shift.
struct BranchFamily {
    std::string id;
    char strand;        // 'x' for the strandless billiard systems
    char target_strand;
    Interval domain;    // finite branch: the domain; family: base domain (n=0 slot unused)
    Interval image;     // n-independent in all systems here
    GroupElement element; // finite: the element; family: the step (g1^{+-1})
    int weight = 1;     // -1 only on the det -1 billiard branch
    bool parabolic = false;
    double domain_shift = 0.0; // family domain(n) = base + n*shift

    Interval domain_at(int n) const {
        if (!parabolic) return domain;
        return Interval{domain.lo + n * domain_shift, domain.hi + n * domain_shift};
    }
    GroupElement element_at(int n) const {
        if (!parabolic) return element;
        return element.pow(n);
    }
};

struct BranchSystem {
    SystemKind kind = SystemKind::I;
    double lambda = 3.0;
    std::vector<BranchFamily> families;

    // family-level admissibility; for parabolic successors the n-range is
    // resolved against the concrete predecessor image by the enumerator
    bool family_transition(int i, int j) const {
        const auto& a = families[i];
        const auto& b = families[j];
        if (a.target_strand != b.strand) return false;
        if (a.parabolic && b.parabolic) return false; // acceleration
        if (b.parabolic) return true;                 // some index overlaps iff image unbounded or reaches; checked per n
        return a.image.overlaps(b.domain);
    }
};

struct BranchRef {
    int family = 0;
    int n = 0; // parabolic index; 0 for finite branches
    bool operator==(const BranchRef& o) const { return family == o.family && n == o.n; }
    bool operator<(const BranchRef& o) const {
        return family != o.family ? family < o.family : n < o.n;
    }
};

struct OrbitClass {
    std::vector<BranchRef> word; // lexicographically minimal rotation
    GroupElement element;        // product a_l ... a_1
    double trace = 0.0;
    double norm_value = 0.0;
    int det_sign = 1;
    bool primitive = true;
    int multiplicity_n = 1; // n(a): word = primitive word repeated n times
    int word_length = 0;
    double fixed_point = 0.0; // repelling fixed point, in the first branch domain
};

BranchSystem build_system(SystemKind kind, const SurfaceParams& params);

std::string branch_label(const BranchSystem& sys, const BranchRef& ref);
std::string word_label(const BranchSystem& sys, const std::vector<BranchRef>& word);

// Product a_l ... a_1 of the branch elements; validates transitions.
GroupElement word_element(const std::vector<BranchRef>& word, const BranchSystem& sys);

// All cyclic-equivalence classes of admissible words of length <= max_word_length
// whose element is hyperbolic with norm <= norm_bound, each verified to carry a
// genuine periodic point (repelling fixed point of the cycle element in the
// first branch's open domain; every orbit point checked against its domain).
std::vector<OrbitClass> periodic_classes(const BranchSystem& sys, int max_word_length,
                                         double norm_bound);

struct SpectrumLine {
    double norm_value;
    int det_sign;
    int multiplicity;
};

// Multiset of (norm, det, multiplicity) over primitive classes with norm <= bound.
std::vector<SpectrumLine> length_spectrum(const BranchSystem& sys, double norm_bound,
                                          int max_word_length = 0);

} // namespace hzeta
