#include "checks.hpp"

#include <algorithm>

namespace qdet {

namespace {

constexpr unsigned kRootsR = kSlotsRoots | kSlotR;
constexpr unsigned kAB = kSlotKappa | kSlotAlpha | kSlotBeta;

constexpr SizeRule kPerN{true, 0, 1, 0};
constexpr SizeRule kNone{};
constexpr SizeRule fixed(long count) { return SizeRule{true, 0, 0, count}; }
constexpr SizeRule kSquare{true, 1, 0, 0};

constexpr std::string_view kN = "matrix size n";
constexpr std::string_view kHalfSize = "half-size m (matrix size 2m)";
constexpr std::string_view kEvenM = "m with matrix size 2m";
constexpr std::string_view kOddM = "m with matrix size 2m+1";
constexpr std::string_view kDegree = "polynomial degree n";
constexpr std::string_view kOrder = "highest power of z compared";

std::vector<CheckInfo> make_registry() {
    using namespace checks;
    return {
        {"hankel", "Hankel determinant of little q-Jacobi moments",
         "det(mu_{i+j+r-2}) = a^{n(n-1)/2} q^{n(n-1)(2n-1)/6 + n(n-1)r/2} prod_k (q,bq;q)_{k-1} (aq;q)_{k+r-1} / "
         "(abq^2;q)_{k+n+r-2}, with mu_m = (aq;q)_m/(abq^2;q)_m",
         kN, kAB | kSlotR, CheckMode::identity, 1, 6, 1, kNone, kNone, kNone, &hankel},
        {"pfaffian_moments", "Pfaffian of the skew moment matrix",
         "Pf((q^{i-1} - q^{j-1}) mu_{i+j+r-2})_{2m x 2m} = a^{m(m-1)} q^{m(m-1)(4m+1)/3 + m(m-1)r} "
         "prod_{k<m} (bq;q)_{2k} prod_{k<=m} (q;q)_{2k-1} (aq;q)_{2k+r-1} / (abq^2;q)_{2(k+m)+r-3}",
         kHalfSize, kAB | kSlotR, CheckMode::identity, 1, 4, 1, kNone, kNone, kNone, &pfaffian_moments},
        {"mehta_wang", "Classical determinant with entries (a+j-i)(b)_{i+j}",
         "det((a+j-i)(b)_{i+j})_{0<=i,j<n} = D_n prod_{i<n} i! (b)_i with D_n from its three-term recurrence; "
         "also D_n by recurrence = D_n by binomial sum. extra = [a, b]",
         kN, kSlotExtra, CheckMode::identity, 1, 6, 0, kNone, kNone, fixed(2), &mehta_wang},
        {"nishizawa", "q-analogue of the (a+j-i)(b)_{i+j} determinant",
         "with s^2 = q^a, t^2 = q^b: det((q^{i-1} - s^2 q^{j-1})(t^2;q)_{i+j-2}) = q^{n(n-1)/2}(1-q)^{n^2} "
         "det((1 - s^2 q^{j-i})/(1-q) (t^2;q)_{i+j-2}/(1-q)^{i+j-2}) = (-i)^n t^{n(n-2)} s^n q^{n(n-1)(n-2)/3} "
         "prod_k (q,t^2;q)_{k-1} Q_n(0; st i, -(t/s) i | q); the 0-based determinant equals "
         "s^{2n} t^{n(n-1)} q^{n(n-1)(2n-7)/6} D_{n,q} prod_{k<n} [k]_q! (t^2;q)_k/(1-q)^k; three D_{n,q} forms agree",
         kN, kSlotKappa | kSlotSHalf | kSlotTHalf, CheckMode::identity, 1, 5, 1, kNone, kNone, kNone, &nishizawa},
        {"thm_main_phi", "Moment determinant with (q^{i-1} - c q^{j-1}) weights, 4phi3 form",
         "det((q^{i-1} - c q^{j-1}) mu_{i+j+r-2}) = (-1)^n a^{n(n-3)/2} q^{n(n+1)(2n-5)/6 + n(n-3)r/2} "
         "(abcq^{r+1};q^2)_n prod_k (q;q)_{k-1}(aq;q)_{k+r}(bq;q)_{k-2}/(abq^2;q)_{k+n+r-2} "
         "4phi3(q^{-n}, t, -t, abq^{n+r}; aq^{r+1}, a^{1/2}b^{1/2}c^{1/2}q^{(r+1)/2}, -a^{1/2}b^{1/2}c^{1/2}q^{(r+1)/2}; q, q), "
         "t = a^{1/2}c^{1/2}q^{(r+1)/2}",
         kN, kRootsR, CheckMode::identity, 1, 6, 1, kNone, kNone, kNone, &thm_main_phi},
        {"thm_main_aw", "Moment determinant with (q^{i-1} - c q^{j-1}) weights, Askey-Wilson form",
         "same determinant = (-i)^n a^{n(n-2)/2} c^{n/2} q^{n(n-2)(2n+1)/6 + n(n-2)r/2} "
         "prod_k (q;q)_{k-1}(aq;q)_{k+r-1}(bq;q)_{k-2}/(abq^2;q)_{k+n+r-2} "
         "p_n(0; t i, -(a/c)^{1/2} q^{(r+1)/2} i, b^{1/2} i, -b^{1/2} i | q); also equals the 4phi3 form",
         kN, kRootsR, CheckMode::identity, 1, 6, 1, kNone, kNone, kNone, &thm_main_aw},
        {"cor_even_phi", "Even-size moment determinant as a 4phi3 in base q^2",
         "n = 2m: det = a^{2m(m-1)} c^m q^{2m(m-1)(4m+1)/3 + 2m(m-1)r} prod_{k<=m} [(q;q)_{2k-1}(aq;q)_{2k+r-1}"
         "(bq;q)_{2k-2}/(abq^2;q)_{2(k+m)+r-3}]^2 4phi3(q^{-2m}, q^{1-2m}/b, c, 1/c; q, aq^{r+1}, q^{1-4m-r}/(ab); q^2, q^2)",
         kEvenM, kRootsR, CheckMode::identity, 1, 3, 1, kNone, kNone, kNone, &cor_even_phi},
        {"cor_even_aw", "Even-size moment determinant as an Askey-Wilson polynomial in base q^2",
         "n = 2m: det = (-1)^m a^{m(2m-1)} b^m c^m q^{m(8m^2+3m-2)/3 + m(2m-1)r} prod_{k<=2m} (q;q)_{k-1}(aq;q)_{k+r-1}/"
         "(abq^2;q)_{k+2m+r-2} prod_{k<=m} (bq;q)_{2k-2}^2 p_m((c+1/c)/2; 1, q, aq^{r+1}, q^{1-4m-r}/(ab) | q^2)",
         kEvenM, kRootsR, CheckMode::identity, 1, 3, 1, kNone, kNone, kNone, &cor_even_aw},
        {"cor_odd_phi", "Odd-size moment determinant as a 4phi3 in base q^2",
         "n = 2m+1: det = a^{2m^2} c^m q^{2m(m+1)(4m-1)/3 + 2m^2 r} (1-c)/(1-q) prod_{k<=m+1} (q;q)_{2k-1}(aq;q)_{2k+r-2}"
         "(bq;q)_{2k-2}/(abq^2;q)_{2(k+m-1)+r} prod_{k<=m} (q;q)_{2k-1}(aq;q)_{2k+r}(bq;q)_{2k-2}/(abq^2;q)_{2(k+m-1)+r} "
         "4phi3(q^{-2m}, q^{1-2m}/b, cq, q/c; q^3, aq^{r+2}, q^{-4m-r}/(ab); q^2, q^2)",
         kOddM, kRootsR, CheckMode::identity, 1, 3, 0, kNone, kNone, kNone, &cor_odd_phi},
        {"cor_odd_aw", "Odd-size moment determinant as an Askey-Wilson polynomial in base q^2",
         "n = 2m+1: det = (-1)^m a^{m(2m+1)} b^m c^m (1-c) q^{m(8m^2+15m+4)/3 + m(2m+1)r} prod_{k<=2m+1} (q;q)_{k-1}"
         "(aq;q)_{k+r-1}/(abq^2;q)_{k+2m+r-1} prod_{k<=m+1}(bq;q)_{2k-2} prod_{k<=m}(bq;q)_{2k-2} "
         "p_m((c+1/c)/2; q, q^2, aq^{r+1}, q^{-4m-r-1}/(ab) | q^2)",
         kOddM, kRootsR, CheckMode::identity, 1, 3, 0, kNone, kNone, kNone, &cor_odd_aw},
        {"c1_pfaffian_square", "At c = 1 the determinant is a Pfaffian squared",
         "det((q^{i-1} - q^{j-1}) mu_{i+j+r-2})_{2m x 2m} = Pf(same matrix)^2", kHalfSize, kAB | kSlotR,
         CheckMode::identity, 1, 3, 1, kNone, kNone, kNone, &c1_pfaffian_square},
        {"classical_hahn", "Classical (q = 1) determinant, continuous Hahn form",
         "det((gamma+j-i)(alpha+1)_{i+j+r-2}/(alpha+beta+2)_{i+j+r-2}) = (-2)^n (h)_n prod_k (k-1)! (alpha+1)_{k+r}"
         "(beta+1)_{k-2}/(alpha+beta+2)_{k+n+r-2} 3F2(-n, (alpha+gamma+r+1)/2, alpha+beta+n+r; h, alpha+r+1; 1), "
         "h = (alpha+beta+gamma+r+1)/2; and = (2i)^n prod_k k! (alpha+1)_{k+r-1}(beta+1)_{k-2}/(alpha+beta+2)_{k+n+r-2} "
         "p_n(0; (alpha+gamma+r+1)/2, beta/2, (alpha-gamma+r+1)/2, beta/2) (continuous Hahn)",
         kN, kSlotClassical | kSlotR, CheckMode::identity, 1, 5, 1, kNone, kNone, kNone, &classical_hahn},
        {"classical_wilson_even", "Classical even-size determinant, Wilson form",
         "n = 2m: det = prod_{k<=m} [(2k-1)! (alpha+1)_{2k+r-1}(beta+1)_{2k-2}/(alpha+beta+2)_{2(k+m)+r-3}]^2 "
         "4F3(-m, -(beta-1)/2-m, gamma/2, -gamma/2; 1/2, (alpha+r+1)/2, -2m-(alpha+beta+r-1)/2; 1); and "
         "= (-8)^m prod_{k<=2m} (k-1)!(alpha+1)_{k+r-1}/(alpha+beta+2)_{k+2m+r-2} prod_{k<=m} (beta+1)_{2k-2}^2 "
         "W_m(t = gamma/2; 0, 1/2, (alpha+r+1)/2, -2m-(alpha+beta+r-1)/2)",
         kEvenM, kSlotClassical | kSlotR, CheckMode::identity, 1, 2, 1, kNone, kNone, kNone, &classical_wilson_even},
        {"classical_wilson_odd", "Classical odd-size determinant, Wilson form",
         "n = 2m+1: det = gamma prod_{k<=m+1} (2k-1)!(alpha+1)_{2k+r-2}(beta+1)_{2k-2}/(alpha+beta+2)_{2(k+m-1)+r} "
         "prod_{k<=m} (2k-1)!(alpha+1)_{2k+r}(beta+1)_{2k-2}/(alpha+beta+2)_{2(k+m-1)+r} 4F3(-m, -(beta-1)/2-m, "
         "(1+gamma)/2, (1-gamma)/2; 3/2, (alpha+r)/2+1, -2m-(alpha+beta+r)/2; 1); and = (-8)^m gamma prod_{k<=2m+1} "
         "(k-1)!(alpha+1)_{k+r-1}/(alpha+beta+2)_{k+2m+r-1} prod_{k<=m+1}(beta+1)_{2k-2} prod_{k<=m}(beta+1)_{2k-2} "
         "W_m(t = gamma/2; 1/2, 1, (alpha+r+1)/2, -2m-(alpha+beta+r+1)/2)",
         kOddM, kSlotClassical | kSlotR, CheckMode::identity, 1, 2, 0, kNone, kNone, kNone, &classical_wilson_odd},
        {"thm_rows", "Row-selected moment determinant",
         "det((q^{k_i-1} - c q^{j-1}) mu_{k_i+j-2}) = a^{n(n-3)/2} q^{n(n+1)(n-4)/6} prod_i (aq;q)_{k_i-1}(bq;q)_{i-2}/"
         "(abq^2;q)_{k_i+n-2} prod_{i<j}(q^{k_i-1} - q^{k_j-1}) sum_nu (-1)^{n-nu} (abcq^{2nu+1};q^2)_{n-nu} (acq;q^2)_nu R_{n,nu}(k)",
         kN, kSlotsRoots | kSlotKTuple, CheckMode::identity, 1, 6, 1, kPerN, kNone, kNone, &thm_rows},
        {"q_kratt", "Row-selected Hankel determinant of moments",
         "det(mu_{k_i+j-2}) = a^{n(n-1)/2} q^{(n+1)n(n-1)/6} prod_i (aq;q)_{k_i-1}/(abq^2;q)_{k_i+n-2} "
         "prod_{i<j}(q^{k_i-1} - q^{k_j-1}) prod_j (bq;q)_{j-1}",
         kN, kAB | kSlotKTuple, CheckMode::identity, 1, 6, 1, kPerN, kNone, kNone, &q_kratt},
        {"r_closed", "R_{n,nu} at consecutive rows",
         "R_{n,nu}(1..n) = q^{(n-nu)(n-nu-1)/2} [n choose nu]_q (aq^{nu+1};q)_{n-nu} (abq^n;q)_nu, zero for nu = -1, n+1",
         kN, kAB, CheckMode::identity, 1, 6, 0, kNone, kNone, kNone, &r_closed},
        {"r_recurrence", "Recurrence of R_{n,nu} in the last row",
         "R_{n,nu}(k) = (1 - abq^{k_n+n-1}) R_{n-1,nu-1}(k'; aq) + q^{n-1}(1 - aq^{k_n}) R_{n-1,nu}(k'), 0 <= nu <= n",
         kN, kAB | kSlotKTuple, CheckMode::identity, 1, 6, 1, kPerN, kNone, kNone, &r_recurrence},
        {"r_sum", "Alternating sum of R_{n,nu}",
         "sum_nu (-1)^{n-nu} R_{n,nu}(k) = a^n q^{n(n-1)/2 + sum k} (b;q)_n", kN, kAB | kSlotKTuple,
         CheckMode::identity, 1, 6, 1, kPerN, kNone, kNone, &r_sum},
        {"residue_ids", "Partial-fraction sums over distinct points",
         "-sum_x (x/q - c q^{j-1})(ax;q)_{j-1}(abq^j x;q)_{n-j} / (x (1 - s x) prod_{y != x}(y - x)) = c q^{j-1}/prod x "
         "+ exceptional term at j = 1 (s = a) or j = n (s = abq^{n-1}), for every j",
         kN, kSlotsRoots | kSlotXList, CheckMode::identity, 1, 6, 1, kNone, kPerN, kNone, &residue_ids},
        {"vandermonde_vw", "Vandermonde-type determinants V and W",
         "(-1)^{n-1} det[x_i^{j-1} | last column -(x_i - c q^k)(ax_i;q)_{k-1}(abq^k x_i;q)_{n-k}/(x_i(1 - s x_i))] / "
         "prod_{i<j}(x_j - x_i) = c q^k/prod x + exceptional term at k = 1 (s = a) or k = n (s = abq^{n-1})",
         kN, kSlotsRoots | kSlotXList, CheckMode::identity, 1, 6, 1, kNone, kPerN, kNone, &vandermonde_vw},
        {"bottom_rows", "Bottom rows of X M Y and L M U",
         "row n of X_n M_n Y_n and of L_n M_n U_n is zero except in columns 1 and n, where it matches the closed forms",
         kN, kSlotsRoots | kSlotKTuple, CheckMode::identity, 2, 6, 2, kPerN, kNone, kNone, &bottom_rows},
        {"triangular_inverses", "Inverses and minors of Y and U",
         "Y_n Y_n^{-1} = U_n U_n^{-1} = I with the closed-form inverses; det Y with row i removed and columns 1..n-1 "
         "= (-q)^{i-n}; det U with row i removed and columns 2..n = (-q)^{i-1}",
         kN, kSlotKappa, CheckMode::identity, 1, 6, 1, kNone, kNone, kNone, &triangular_inverses},
        {"pq_lemma", "Determinants and minors of P = X M Y and Q = L M U",
         "det P and det Q versus det M over the row Vandermonde; P minor (cols 2..n) and Q minor (cols 1..n-1) versus "
         "M at n-1 rows; leading P minor versus trailing Q minor",
         kN, kSlotsRoots | kSlotKTuple, CheckMode::identity, 1, 6, 1, kPerN, kNone, kNone, &pq_lemma},
        {"m_recurrence", "Recurrence for det M_n in the number of rows",
         "det M_n / (a^{n-2}(bq;q)_{n-2} prod_{i<n}(q^{k_i} - q^{k_n})) = (1-acq)(1-abq^{k_n+n-1})/q det M_{n-1}(aq, b, cq) "
         "- q^{n(n-3)/2}(1-abcq^{2n-1})(1-aq^{k_n}) det M_{n-1}(a, b, c)",
         kN, kSlotsRoots | kSlotKTuple, CheckMode::identity, 2, 6, 2, kPerN, kNone, kNone, &m_recurrence},
        {"m_closed", "Closed form of det M_n",
         "det M_n = (-1)^n a^{n(n-3)/2} q^{n(n+1)(n-4)/6} prod_i (bq;q)_{i-2} prod_{i<j}(q^{k_i-1} - q^{k_j-1}) "
         "sum_nu (-1)^nu (abcq^{2nu+1};q^2)_{n-nu} (acq;q^2)_nu R_{n,nu}(k); and the moment determinant equals "
         "prod_i (aq;q)_{k_i-1}/(abq^2;q)_{k_i+n-2} det M_n",
         kN, kSlotsRoots | kSlotKTuple, CheckMode::identity, 1, 6, 1, kPerN, kNone, kNone, &m_closed},
        {"phi_contiguous_1", "Contiguous relation in the first two numerators",
         "[z^k] (4phi3(a, bq, c, d; e, f, g) - 4phi3(aq, b, c, d; e, f, g)) = (b-a)(1-c)(1-d)/((1-e)(1-f)(1-g)) "
         "[z^{k-1}] 4phi3(aq, bq, cq, dq; eq, fq, gq), k = 0..order. extra = [a..g]",
         kOrder, kSlotKappa | kSlotExtra, CheckMode::identity, 12, 12, 0, kNone, kNone, fixed(7), &phi_contiguous_1},
        {"phi_contiguous_2", "Contiguous relation in two denominators",
         "[z^k] ((1-f)(a-e) 4phi3(a,b,c,d; eq,f,g) - (1-e)(a-f) 4phi3(a,b,c,d; e,fq,g)) = (1-a)(f-e) [z^k] "
         "4phi3(aq,b,c,d; eq,fq,g), k = 0..order. extra = [a..g]",
         kOrder, kSlotKappa | kSlotExtra, CheckMode::identity, 12, 12, 0, kNone, kNone, fixed(7), &phi_contiguous_2},
        {"phi_contiguous_3", "Three-term relation for a terminating balanced 4phi3",
         "(1-e)(1-f)(1-g) 4phi3(q^{-n}, B, c, d; e, f, g; q, q) = c(1-e)(1-f/c)(1-g/c) 4phi3(q^{1-n}, Bq, c, d; e, fq, gq) "
         "+ d(1-c)(1-e/d)(1-fg/(cd)) 4phi3(q^{1-n}, Bq, cq, d; eq, fq, gq), B = efg q^{n-1}/(cd). extra = [c, d, e, f, g]",
         kDegree, kSlotKappa | kSlotExtra, CheckMode::identity, 1, 5, 1, kNone, kNone, fixed(5), &phi_contiguous_3},
        {"watson", "Terminating very-well-poised 8W7 as a balanced 4phi3",
         "8W7(a1; b, c, d, e, q^{-n}; q, a1^2 q^{n+2}/(bcde)) = (a1q, a1q/(de);q)_n/(a1q/d, a1q/e;q)_n "
         "4phi3(q^{-n}, d, e, a1q/(bc); a1q/b, a1q/c, deq^{-n}/a1; q, q). extra = [b, c, d, e, a1^{1/2}]",
         kDegree, kSlotKappa | kSlotExtra, CheckMode::identity, 1, 5, 0, kNone, kNone, fixed(5), &watson},
        {"w8_contiguous", "Three-term relation for terminating 8W7 series",
         "(c-a1)(d-a1q)(e-a1q)(b-a1q^n) 8W7(a1; b, cq, d, e, q^{-n}; z) = a1(1-b)(1-a1q)(de-a1q)(1-cq^n) "
         "8W7(a1q; bq, cq, d, e, q^{1-n}; z) + (bc-a1)(d-a1q)(e-a1q)(1-a1q^n) 8W7(a1; b, c, d, e, q^{1-n}; z), "
         "z = a1^2 q^{n+1}/(bcde). extra = [b, c, d, e, a1^{1/2}]",
         kDegree, kSlotKappa | kSlotExtra, CheckMode::identity, 1, 5, 1, kNone, kNone, fixed(5), &w8_contiguous},
        {"even_odd_factorization", "p_n(0; a, b, c, -c) through degree-m polynomials in base q^2",
         "p_{2m}(0; a,b,c,-c | q) = (-1)^m (ab)^m c^{2m} q^{m(3m-1)} (-c^2;q^2)_m p_m(x0; 1, q, ab, -q^{2-4m}/(abc^2) | q^2); "
         "p_{2m+1}(0; a,b,c,-c | q) = (-1)^{m+1} a^m b^{m+1} c^{2m}(1+a/b) q^{m(3m+1)} (-c^2;q^2)_{m+1} "
         "p_m(x0; q, q^2, ab, -q^{-4m}/(abc^2) | q^2), x0 = -(a/b + b/a)/2. extra = [a, b, c]",
         kHalfSize, kSlotKappa | kSlotExtra, CheckMode::identity, 0, 3, 0, kNone, kNone, fixed(3),
         &even_odd_factorization},
        {"andrews", "Closed form of p_n(0; a, -a, b, -b)",
         "p_n(0; a,-a,b,-b | q) = (-1)^m (q, -a^2, -b^2, a^2 b^2 q^{2m}; q^2)_m for n = 2m and 0 for odd n; "
         "recurrence and 4phi3 evaluations agree. extra = [a, b]",
         kDegree, kSlotKappa | kSlotExtra, CheckMode::identity, 0, 8, 0, kNone, kNone, fixed(2), &andrews},
        {"dj_generic", "Condensation identity on a generic matrix",
         "det A[2..n-1] det A = det A[1..n-1] det A[2..n] - det A[1..n-1 | 2..n] det A[2..n | 1..n-1]. "
         "extra = the n^2 entries, row-major",
         kN, kSlotExtra, CheckMode::identity, 2, 6, 2, kNone, kNone, kSquare, &dj_generic},
        {"dj_specialized", "Condensation in shifted parameters",
         "D_n(a,b,c) D_{n-2}(aq^2,b,c) = q (aq;q)_2/(abq^2;q)_2 D_{n-1}(a,b,c) D_{n-1}(aq^2,b,c) - q (1-aq)^n "
         "(1-abq^3)^{n-2}/((1-aq^2)^{n-2}(1-abq^2)^n) D_{n-1}(aq,b,cq) D_{n-1}(aq,b,c/q), D_n the r = 0 moment "
         "determinant; plus condensation on the moment matrix itself",
         kN, kSlotsRoots, CheckMode::identity, 2, 6, 2, kNone, kNone, kNone, &dj_specialized},
        {"quadratic_full", "Quadratic relation for the theorem's Askey-Wilson polynomials",
         "with A1 = (ac)^{1/2}q^{1/2} i, B1 = -(a/c)^{1/2}q^{1/2} i, A3 = (ac)^{1/2}q^{3/2} i, B3 = -(a/c)^{1/2}q^{3/2} i, "
         "C = b^{1/2} i and P_n(A,B) = p_n(0; A, B, C, -C): aq(1-q^{n-1})(1-bq^{n-2}) P_n(A1,B1) P_{n-2}(A3,B3) = "
         "(1-aq^n)(1-abq^n) P_{n-1}(A1,B1) P_{n-1}(A3,B3) - (1-aq)(1-abq^{2n-1}) P_{n-1}(A3,B1) P_{n-1}(A1,B3)",
         kDegree, kSlotsRoots, CheckMode::identity, 1, 8, 1, kNone, kNone, kNone, &quadratic_full},
        {"quadratic_clean", "Quadratic relation for p_n(0; a, b, c, -c)",
         "ab(1-q^{n-1})(1+c^2q^{n-2}) P_n(a,b) P_{n-2}(aq,bq) = (1-abq^{n-1})(1+abc^2q^{n-1}) P_{n-1}(a,b) P_{n-1}(aq,bq) "
         "- (1-ab)(1+abc^2q^{2n-2}) P_{n-1}(aq,b) P_{n-1}(a,bq), P_n(a,b) = p_n(0; a,b,c,-c). extra = [a, b, c]",
         kDegree, kSlotKappa | kSlotExtra, CheckMode::identity, 1, 8, 1, kNone, kNone, fixed(3), &quadratic_clean},
        {"quadratic_phi", "Quadratic relation written with 4phi3 series",
         "the quadratic_clean relation after replacing each p_n by (ab,ac,-ac;q)_n a^{-n} "
         "4phi3(q^{-n}, -abc^2q^{n-1}, ai, -ai; ab, ac, -ac; q, q) and cancelling prefactors; also checks that replacement. "
         "extra = [a, b, c]",
         kDegree, kSlotKappa | kSlotExtra, CheckMode::identity, 1, 8, 1, kNone, kNone, fixed(3), &quadratic_phi},
        {"conjecture_mw3", "Conjectured quadratic relation at generic x, c, d (evidence only)",
         "ab(1-q^{n-1})(1-cdq^{n-2}) P_n(a,b) P_{n-2}(aq,bq) = (1-abq^{n-1})(1-abcdq^{n-1}) P_{n-1}(a,b) P_{n-1}(aq,bq) "
         "- (1-ab)(1-abcdq^{2n-2}) P_{n-1}(aq,b) P_{n-1}(a,bq), P_n(a,b) = p_n(x; a,b,c,d). extra = [a, b, c], d = delta",
         kDegree, kSlotKappa | kSlotExtra | kSlotDelta | kSlotX, CheckMode::evidence, 1, 6, 1, kNone, kNone, fixed(3),
         &conjecture_mw3},
    };
}

}  // namespace

const std::vector<CheckInfo>& registry() {
    static const std::vector<CheckInfo> table = make_registry();
    return table;
}

const CheckInfo* find_check(std::string_view id) {
    const auto& table = registry();
    auto it = std::find_if(table.begin(), table.end(), [&](const CheckInfo& c) { return c.id == id; });
    return it == table.end() ? nullptr : &*it;
}

std::string_view status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::evidence_pass: return "evidence-pass";
        case CheckStatus::evidence_fail: return "evidence-fail";
        case CheckStatus::skipped_degenerate: return "skipped-degenerate";
    }
    return "unknown";
}

}  // namespace qdet
