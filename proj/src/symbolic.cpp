#include "hzeta/symbolic.hpp"

#include <algorithm>
#include <cmath>

namespace hzeta {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFpTol = 1e-10;

Interval iv(double lo, double hi) { return Interval{lo, hi}; }

} // namespace

BranchSystem build_system(SystemKind kind, const SurfaceParams& params) {
    double lam = params.lambda;
    GroupElement S = elem_S();
    GroupElement T = elem_T(lam);
    GroupElement Ti = T.inverse();
    GroupElement g2 = elem_g(2, lam);
    GroupElement g3 = elem_g(3, lam);
    GroupElement id;

    BranchSystem sys;
    sys.kind = kind;
    sys.lambda = lam;
    auto fin = [&](std::string id_, char st, char tg, Interval dom, Interval img,
                   GroupElement e, int w = 1) {
        sys.families.push_back({std::move(id_), st, tg, dom, img, e, w, false, 0.0});
    };
    auto par = [&](std::string id_, char st, char tg, Interval base, double shift,
                   Interval img, GroupElement step) {
        sys.families.push_back({std::move(id_), st, tg, base, img, step, 1, true, shift});
    };

    switch (kind) {
        case SystemKind::I:
            fin("g2@a", 'a', 'a', iv(-1, 0), iv(-1, kInf), g2);
            fin("g3@a", 'a', 'b', iv(0, 1), iv(-kInf, 1), g3);
            fin("g2@b", 'b', 'a', iv(-1, 0), iv(-1, kInf), g2);
            fin("g3@b", 'b', 'b', iv(0, 1), iv(-kInf, 1), g3);
            par("T-@a", 'a', 'a', iv(-1, -1 + lam), lam, iv(-1, -1 + lam), Ti);
            par("T+@b", 'b', 'b', iv(1 - lam, 1), -lam, iv(1 - lam, 1), T);
            break;
        case SystemKind::IJplus:
        case SystemKind::IJminus:
            fin("g2", 'x', 'x', iv(-1, 0), iv(-1, kInf), g2);
            fin("g2J", 'x', 'x', iv(0, 1), iv(-1, kInf), g2 * elem_J(),
                kind == SystemKind::IJminus ? -1 : 1);
            par("T-", 'x', 'x', iv(-1, -1 + lam), lam, iv(-1, 1), Ti);
            break;
        case SystemKind::R:
            fin("g2@a", 'a', 'a', iv(-1, 0), iv(-1, kInf), g2);
            fin("g3@a", 'a', 'b', iv(0, 1), iv(-kInf, 1), g3);
            fin("g2@b", 'b', 'a', iv(-1, 0), iv(-1, kInf), g2);
            fin("g3@b", 'b', 'b', iv(0, 1), iv(-kInf, 1), g3);
            fin("T-@a", 'a', 'a', iv(-1 + lam, kInf), iv(-1, kInf), Ti);
            fin("T+@b", 'b', 'b', iv(-kInf, 1 - lam), iv(-kInf, 1), T);
            break;
        case SystemKind::P:
            fin("S@a>d", 'a', 'd', iv(-1, 0), iv(1, kInf), S);
            fin("id@a>g", 'a', 'g', iv(0, kInf), iv(0, kInf), id);
            fin("S@b>g", 'b', 'g', iv(-kInf, 0), iv(0, kInf), S);
            fin("S@b>c", 'b', 'c', iv(0, 1), iv(-kInf, -1), S);
            fin("T@c>f", 'c', 'f', iv(-kInf, -1), iv(-kInf, lam - 1), T);
            fin("T-@d>e", 'd', 'e', iv(lam / 2, kInf), iv(-lam / 2, kInf), Ti);
            fin("id@e>a", 'e', 'a', iv(-1, kInf), iv(-1, kInf), id);
            fin("id@f>b", 'f', 'b', iv(-kInf, 1), iv(-kInf, 1), id);
            fin("S@g>c", 'g', 'c', iv(0, 1), iv(-kInf, -1), S);
            fin("id@g>d", 'g', 'd', iv(1, kInf), iv(1, kInf), id);
            break;
    }
    return sys;
}

std::string branch_label(const BranchSystem& sys, const BranchRef& ref) {
    const auto& f = sys.families[ref.family];
    if (!f.parabolic) return f.id;
    return f.id + "^" + std::to_string(ref.n);
}

std::string word_label(const BranchSystem& sys, const std::vector<BranchRef>& word) {
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) out += ";";
        out += branch_label(sys, word[i]);
    }
    return out;
}

GroupElement word_element(const std::vector<BranchRef>& word, const BranchSystem& sys) {
    if (word.empty()) throw InadmissibleWord("empty word");
    for (size_t i = 0; i < word.size(); ++i) {
        const auto& cur = sys.families[word[i].family];
        const auto& nxt = sys.families[word[(i + 1) % word.size()].family];
        if (cur.target_strand != nxt.strand || (cur.parabolic && nxt.parabolic))
            throw InadmissibleWord("inadmissible transition " + branch_label(sys, word[i]) +
                                   " -> " + branch_label(sys, word[(i + 1) % word.size()]));
    }
    GroupElement m;
    for (const auto& ref : word) m = sys.families[ref.family].element_at(ref.n) * m;
    return m;
}

namespace {

// Image of an open interval under a Moebius map that has no pole in the
// interior (poles at the boundary give half-lines).
Interval interval_image(const GroupElement& g, const Interval& I) {
    double a = g.a(), b = g.b(), c = g.c(), d = g.d();
    bool increasing = g.det_sign() > 0;
    auto endpoint = [&](double x, bool is_lo) -> double {
        if (std::isinf(x)) {
            if (c != 0.0) return a / c;
            double slope = a / d; // affine map
            bool pos_end = (x > 0);
            return (slope > 0) == pos_end ? kInf : -kInf;
        }
        double den = c * x + d;
        if (std::fabs(den) < 1e-14) {
            // pole at this boundary; approach from inside the interval
            bool from_right = is_lo;
            // f(x) ~ (a*p+b)/(c*(x-p)) near pole p: sign via monotonicity
            if (increasing) return from_right ? -kInf : kInf;
            return from_right ? kInf : -kInf;
        }
        return (a * x + b) / den;
    };
    double vlo = endpoint(I.lo, true);
    double vhi = endpoint(I.hi, false);
    if (increasing) return Interval{vlo, vhi};
    return Interval{vhi, vlo};
}

Interval intersect(const Interval& x, const Interval& y) {
    return Interval{std::max(x.lo, y.lo), std::min(x.hi, y.hi)};
}

// Lower bound on |M'| over the preimage cylinder, via the inverse map on the
// forward image J: inf |M'| = (inf_{y in J} |c' y + d'|)^2 for M^{-1} = [... c' d'].
double derivative_floor(const GroupElement& m, const Interval& J) {
    GroupElement mi = m.inverse();
    double c = mi.c(), d = mi.d();
    if (c == 0.0) return d * d; // |M'| = 1/|(M^-1)'| = d'^2, constant
    double root = -d / c;
    if (J.contains(root)) return 0.0;
    double vlo = std::isinf(J.lo) ? kInf : std::fabs(c * J.lo + d);
    double vhi = std::isinf(J.hi) ? kInf : std::fabs(c * J.hi + d);
    double mn = std::min(vlo, vhi);
    if (std::isinf(mn)) return 0.0;
    return mn * mn;
}

struct Enumerator {
    const BranchSystem& sys;
    int max_len;
    double bound;
    bool sound_prune;
    std::vector<OrbitClass> out;

    std::vector<BranchRef> word;
    std::vector<GroupElement> prod;  // prod[k] = elem(word[k]) * ... * elem(word[0])
    std::vector<Interval> cyl;       // forward image after k+1 steps

    explicit Enumerator(const BranchSystem& s, int ml, double b)
        : sys(s), max_len(ml), bound(b) {
        sound_prune = s.kind != SystemKind::P; // P has contracting stretches
    }

    bool lex_min_rotation() const {
        size_t l = word.size();
        for (size_t r = 1; r < l; ++r) {
            for (size_t i = 0; i < l; ++i) {
                const BranchRef& a = word[(r + i) % l];
                const BranchRef& b = word[i];
                if (a < b) return false;
                if (b < a) break;
            }
        }
        return true;
    }

    void try_close() {
        const auto& first = sys.families[word[0].family];
        const auto& last = sys.families[word.back().family];
        if (last.target_strand != first.strand) return;
        if (last.parabolic && first.parabolic) return;
        if (!cyl.back().overlaps(first.domain_at(word[0].n))) return;
        if (!lex_min_rotation()) return;

        const GroupElement& m = prod.back();
        if (classify(m) != ElementClass::Hyperbolic) return;
        double nrm = norm_of(m);
        if (nrm > bound) return;

        auto fps = fixed_points_any(m);
        double x1 = fps.second; // repelling fixed point of the cycle map
        size_t l = word.size();
        // verify the whole periodic orbit against the open branch domains
        double x = x1;
        for (size_t k = 0; k < l; ++k) {
            Interval dom = sys.families[word[k].family].domain_at(word[k].n);
            if (std::fabs(x - dom.lo) <= kFpTol || std::fabs(x - dom.hi) <= kFpTol)
                throw Error("periodic point within tolerance of a branch-domain boundary: " +
                            word_label(sys, word));
            if (!dom.contains(x)) return;
            x = sys.families[word[k].family].element_at(word[k].n).apply_real(x);
        }

        size_t period = l;
        for (size_t p = 1; p < l; ++p) {
            if (l % p) continue;
            bool same = true;
            for (size_t i = 0; i < l && same; ++i)
                same = word[(i + p) % l] == word[i];
            if (same) {
                period = p;
                break;
            }
        }

        OrbitClass cls;
        cls.word = word;
        cls.element = m;
        cls.trace = m.trace();
        cls.norm_value = nrm;
        cls.det_sign = m.det_sign();
        cls.primitive = (period == l);
        cls.multiplicity_n = int(l / period);
        cls.word_length = int(l);
        cls.fixed_point = x1;
        out.push_back(std::move(cls));
    }

    void extend() {
        if (!word.empty()) try_close();
        if (int(word.size()) == max_len) return;
        const Interval& J = word.empty() ? Interval{-kInf, kInf} : cyl.back();
        char need = word.empty() ? 0 : sys.families[word.back().family].target_strand;
        bool prev_par = !word.empty() && sys.families[word.back().family].parabolic;

        for (int fi = 0; fi < int(sys.families.size()); ++fi) {
            const auto& fam = sys.families[fi];
            if (!word.empty()) {
                if (fam.strand != need) continue;
                if (prev_par && fam.parabolic) continue;
            } else if (fam.parabolic) {
                // every admissible cyclic word contains a finite branch, and
                // parabolic families sort after finite ones, so no lex-minimal
                // rotation starts parabolic
                continue;
            }
            if (!fam.parabolic) {
                step(fi, 0, J, fam.domain);
            } else {
                for (int n = 1; n <= 2000000; ++n) {
                    Interval dom = fam.domain_at(n);
                    if (fam.domain_shift > 0 && dom.lo >= J.hi) break;
                    if (fam.domain_shift < 0 && dom.hi <= J.lo) break;
                    if (!J.overlaps(dom)) continue;
                    if (!step(fi, n, J, dom)) break; // derivative floor exceeded
                }
            }
        }
    }

    // returns false when the norm floor already exceeds the bound (so larger
    // parabolic indices at this slot can be skipped as well)
    bool step(int fi, int n, const Interval& J, const Interval& dom) {
        const auto& fam = sys.families[fi];
        Interval cut = intersect(J, dom);
        if (!(cut.lo < cut.hi)) return true;
        GroupElement e = fam.element_at(n);
        GroupElement m = word.empty() ? e : e * prod.back();
        Interval img = interval_image(e, cut);
        if (sound_prune) {
            double floor = derivative_floor(m, img);
            if (floor > bound * 1.0000001) return false;
        }
        word.push_back({fi, n});
        prod.push_back(m);
        cyl.push_back(img);
        extend();
        word.pop_back();
        prod.pop_back();
        cyl.pop_back();
        return true;
    }
};

} // namespace

std::vector<OrbitClass> periodic_classes(const BranchSystem& sys, int max_word_length,
                                         double norm_bound) {
    if (max_word_length < 1) throw Error("periodic_classes: max word length must be >= 1");
    Enumerator en(sys, max_word_length, norm_bound);
    en.extend();
    std::sort(en.out.begin(), en.out.end(), [](const OrbitClass& a, const OrbitClass& b) {
        if (a.norm_value != b.norm_value) return a.norm_value < b.norm_value;
        if (a.det_sign != b.det_sign) return a.det_sign > b.det_sign;
        if (a.word_length != b.word_length) return a.word_length < b.word_length;
        return a.word < b.word;
    });
    return en.out;
}

std::vector<SpectrumLine> length_spectrum(const BranchSystem& sys, double norm_bound,
                                          int max_word_length) {
    if (max_word_length <= 0)
        max_word_length = std::max(6, int(std::ceil(2.0 * std::log(std::max(norm_bound, 8.0)))));
    auto classes = periodic_classes(sys, max_word_length, norm_bound);
    std::vector<SpectrumLine> lines;
    for (const auto& c : classes) {
        if (!c.primitive) continue;
        if (!lines.empty() && std::fabs(lines.back().norm_value - c.norm_value) < 1e-9 &&
            lines.back().det_sign == c.det_sign) {
            lines.back().multiplicity += 1;
        } else {
            lines.push_back({c.norm_value, c.det_sign, 1});
        }
    }
    return lines;
}

} // namespace hzeta
