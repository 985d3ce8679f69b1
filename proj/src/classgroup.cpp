#include "starkcol/classgroup.hpp"
#include "starkcol/error.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace starkcol {

std::string form_key(const Form& f) {
    std::ostringstream os;
    os << f.a << '|' << f.b << '|' << f.c;
    return os.str();
}

std::vector<Form> enumerate_reduced_forms(const Int& delta, Exec exec) {
    if (delta <= 0 || is_perfect_square(delta))
        fail(ErrorCode::BadDiscriminant, "need a positive non-square discriminant");
    Int s = isqrt(delta);
    long smax = static_cast<long>(s);
    long parity = static_cast<long>(mod_floor(delta, 2));

    auto forms_for_b = [&](long bl) {
        std::vector<Form> out;
        Int b(bl);
        Int t = delta - b * b; // = -4ac > 0 inside the window
        if (t <= 0) return out;
        Int prod = t / 4; // = |a||c|
        Int lo = (s - b) / 2;
        Int hi = (s + b) / 2 + 1;
        if (lo < 1) lo = 1;
        for (Int aa = lo; aa <= hi; ++aa) {
            if (prod % aa != 0) continue;
            Int two_a = 2 * aa;
            if (delta >= (two_a + b) * (two_a + b)) continue;
            if (two_a > b && (two_a - b) * (two_a - b) >= delta) continue;
            Int cc = prod / aa;
            out.push_back(Form{aa, b, -cc});
            out.push_back(Form{-aa, b, cc});
        }
        return out;
    };

    // delta and b share parity (b^2 = delta mod 4); b = 0 is never reduced
    std::vector<long> bs;
    for (long bl = (parity == 0 ? 2 : 1); bl <= smax; bl += 2) bs.push_back(bl);

    std::vector<std::vector<Form>> per_b(bs.size());
    if (exec == Exec::openmp) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < bs.size(); ++i) per_b[i] = forms_for_b(bs[i]);
    } else {
        for (std::size_t i = 0; i < bs.size(); ++i) per_b[i] = forms_for_b(bs[i]);
    }

    std::vector<Form> all;
    for (auto& v : per_b) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end(), form_less);
    return all;
}

SmallGroup SmallGroup::from_elements(const Int& delta, std::vector<IdealClass> elems, CanonFn canon) {
    SmallGroup g;
    g.delta_ = delta;
    g.canon_ = std::move(canon);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    g.elems_ = std::move(elems);
    for (std::size_t i = 0; i < g.elems_.size(); ++i) g.index_[form_key(g.elems_[i].canon())] = i;
    IdealClass e = principal_class(delta);
    if (g.canon_) e = g.canon_(e);
    g.id_ = g.index_of(e);

    if (g.elems_.size() <= kTableCap) {
        std::size_t n = g.elems_.size();
        g.table_.assign(n, std::vector<std::uint32_t>(n));
        std::atomic<bool> bad{false};
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < n; ++i) {
            if (bad.load(std::memory_order_relaxed)) continue;
            for (std::size_t j = i; j < n; ++j) {
                IdealClass prod = compose(g.elems_[i], g.elems_[j]);
                if (g.canon_) prod = g.canon_(prod);
                auto k = g.index_.find(form_key(prod.canon()));
                if (k == g.index_.end()) {
                    bad.store(true, std::memory_order_relaxed);
                    break;
                }
                g.table_[i][j] = g.table_[j][i] = static_cast<std::uint32_t>(k->second);
            }
        }
        if (bad.load()) fail(ErrorCode::BadArgument, "element set not closed under composition");
    }
    return g;
}

std::size_t SmallGroup::index_of(const IdealClass& c) const {
    auto it = index_.find(form_key(c.canon()));
    if (it == index_.end()) fail(ErrorCode::BadArgument, "class not in group table");
    return it->second;
}

std::optional<std::size_t> SmallGroup::try_index_of(const IdealClass& c) const {
    auto it = index_.find(form_key(c.canon()));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t SmallGroup::mul(std::size_t i, std::size_t j) const {
    if (!table_.empty()) return table_[i][j];
    IdealClass prod = compose(elems_[i], elems_[j]);
    if (canon_) prod = canon_(prod);
    return index_of(prod);
}

std::size_t SmallGroup::inv(std::size_t i) const {
    IdealClass v = inverse(elems_[i]);
    if (canon_) v = canon_(v);
    return index_of(v);
}

std::size_t SmallGroup::pow(std::size_t i, Int e) const {
    std::size_t acc = id_;
    std::size_t base = i;
    if (e < 0) {
        base = inv(i);
        e = -e;
    }
    while (e > 0) {
        if (e % 2 == 1) acc = mul(acc, base);
        base = mul(base, base);
        e /= 2;
    }
    return acc;
}

Int SmallGroup::order_of(std::size_t i) const {
    Int n(elems_.size());
    Int ord = n;
    Int m = n;
    for (Int q = 2; q * q <= m; ++q) {
        if (m % q != 0) continue;
        while (m % q == 0) m /= q;
        while (ord % q == 0 && pow(i, ord / q) == id_) ord /= q;
    }
    if (m > 1)
        while (ord % m == 0 && pow(i, ord / m) == id_) ord /= m;
    return ord;
}

namespace {

std::vector<std::pair<Int, long>> factorize(Int n) {
    std::vector<std::pair<Int, long>> fs;
    for (Int q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            long e = 0;
            while (n % q == 0) {
                n /= q;
                ++e;
            }
            fs.push_back({q, e});
        }
    }
    if (n > 1) fs.push_back({n, 1});
    return fs;
}

std::vector<std::size_t> closure_of(const SmallGroup& g, const std::vector<std::size_t>& gens) {
    std::set<std::size_t> seen{g.id()};
    std::vector<std::size_t> frontier{g.id()};
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t x : frontier)
            for (std::size_t gen : gens) {
                std::size_t y = g.mul(x, gen);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return std::vector<std::size_t>(seen.begin(), seen.end());
}

} // namespace

GroupStructure group_structure(const SmallGroup& g) {
    GroupStructure st;
    std::size_t n = g.size();
    st.order = Int(n);
    if (n == 1) return st;

    // abelian q-group type from kernel sizes of the q^i-power maps
    auto factors = factorize(st.order);
    std::map<Int, std::vector<long>> exps; // prime -> cyclic-factor exponents, descending
    for (auto& [q, e] : factors) {
        std::vector<long> counts{0}; // counts[i] = log_q #Ker(x -> x^{q^i})
        for (long i = 1; i <= e; ++i) {
            Int qi = pow_int(q, static_cast<unsigned long>(i));
            std::size_t ker = 0;
            for (std::size_t x = 0; x < n; ++x)
                if (g.pow(x, qi) == g.id()) ++ker;
            long lg = 0;
            Int k(ker);
            while (k > 1) {
                k /= q;
                ++lg;
            }
            counts.push_back(lg);
        }
        std::vector<long> exp_list;
        for (long i = 1; i <= e; ++i) {
            long m = counts[i] - counts[i - 1];            // #factors with exponent >= i
            long m_next = (i == e) ? 0 : counts[i + 1] - counts[i];
            for (long t = 0; t < m - m_next; ++t) exp_list.push_back(i);
        }
        std::sort(exp_list.rbegin(), exp_list.rend());
        exps[q] = exp_list;
    }

    std::size_t r = 0;
    for (auto& [q, list] : exps) r = std::max(r, list.size());
    std::vector<Int> divisors(r, Int(1));
    for (auto& [q, list] : exps)
        for (std::size_t i = 0; i < list.size(); ++i)
            divisors[r - 1 - i] *= pow_int(q, static_cast<unsigned long>(list[i]));
    st.divisors = divisors;

    // generator basis, one q-Sylow at a time: pick an element of exact order
    // q^want whose q^(want-1) power stays outside the part already generated
    std::map<Int, std::vector<std::size_t>> qbases;
    for (auto& [q, list] : exps) {
        std::vector<std::size_t> basis;
        std::vector<std::size_t> covered = closure_of(g, {});
        for (long want : list) {
            Int target = pow_int(q, static_cast<unsigned long>(want));
            std::set<std::size_t> covset(covered.begin(), covered.end());
            bool ok = false;
            for (std::size_t x = 0; x < n && !ok; ++x) {
                if (g.order_of(x) != target) continue;
                if (covset.count(g.pow(x, target / q))) continue;
                basis.push_back(x);
                ok = true;
            }
            if (!ok) fail(ErrorCode::BadArgument, "abelian basis extraction failed");
            covered = closure_of(g, basis);
        }
        qbases[q] = basis;
    }
    std::vector<std::size_t> gens(r, g.id());
    for (auto& [q, basis] : qbases)
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::size_t slot = r - 1 - i;
            gens[slot] = g.mul(gens[slot], basis[i]);
        }
    st.gens = gens;
    return st;
}

SmallGroup narrow_group(const Int& delta, Exec exec) {
    std::vector<Form> reduced = enumerate_reduced_forms(delta, exec);
    std::set<std::string> visited;
    std::vector<IdealClass> classes;
    for (const Form& f : reduced) {
        if (visited.count(form_key(f))) continue;
        // walk the cycle once, marking members and taking the lex-least form
        Form best = f;
        Form cur = f;
        do {
            visited.insert(form_key(cur));
            if (form_less(cur, best)) best = cur;
            cur = rho(cur);
        } while (cur != f);
        classes.push_back(IdealClass(best));
    }
    return SmallGroup::from_elements(delta, std::move(classes));
}

namespace {

Real to_real(const Rat& q) { return Real(numerator(q)) / Real(denominator(q)); }

Real regulator(const QuadField& K) {
    return log(to_real(K.fund_unit.x) + to_real(K.fund_unit.y) * sqrt(Real(K.disc.D)));
}

Real truncated_euler_L(const Int& delta, long P0) {
    static thread_local std::vector<long> primes;
    static thread_local long primes_bound = 0;
    if (primes_bound < P0) {
        primes = primes_below(P0);
        primes_bound = P0;
    }
    Real L = 1;
    for (long q : primes) {
        if (q >= P0) break;
        int ch = kronecker(delta, Int(q));
        if (ch == 0) continue;
        L *= Real(1) / (Real(1) - Real(ch) / Real(q));
    }
    return L;
}

// closure over raw classes (group not known yet); aborts when it passes `cap`
std::vector<IdealClass> raw_closure(const Int& delta, const std::vector<IdealClass>& seed,
                                    const std::vector<IdealClass>& gens, const Int& cap) {
    std::map<std::string, IdealClass> seen;
    IdealClass e = principal_class(delta);
    seen.emplace(form_key(e.canon()), e);
    std::vector<IdealClass> frontier{e};
    for (const IdealClass& s : seed)
        if (seen.emplace(form_key(s.canon()), s).second) frontier.push_back(s);
    while (!frontier.empty()) {
        std::vector<IdealClass> next;
        for (const IdealClass& x : frontier)
            for (const IdealClass& gen : gens) {
                IdealClass y = compose(x, gen);
                if (seen.emplace(form_key(y.canon()), y).second) {
                    next.push_back(y);
                    if (Int(seen.size()) > cap)
                        fail(ErrorCode::GeneratorSetInsufficient,
                             "subgroup closure exceeded the class number window");
                }
            }
        frontier = std::move(next);
    }
    std::vector<IdealClass> out;
    for (auto& [k, v] : seen) out.push_back(v);
    return out;
}

} // namespace

SmallGroup narrow_group_bsgs(const QuadField& K, Exec exec) {
    const Int& delta = K.disc.delta;
    Real reg = regulator(K);
    Real sqrt_delta = sqrt(Real(delta));

    // prime-form generators, smallest norms first
    std::vector<IdealClass> gens;
    std::vector<long> gen_norms;
    auto extend_gens = [&](long up_to) {
        for (long q : primes_below(up_to)) {
            if (!gen_norms.empty() && q <= gen_norms.back()) continue;
            if (kronecker(delta, Int(q)) == -1) continue;
            gens.push_back(prime_form(delta, Int(q)));
            gen_norms.push_back(q);
        }
    };
    extend_gens(60);

    // class-number window from the truncated Euler product, tightened until
    // it isolates a unique multiple of the generated subgroup's order
    const long ladders[] = {10000, 100000, 400000, 1600000};
    for (int step = 0; step < 4; ++step) {
        long P0 = ladders[step];
        Real L = truncated_euler_L(delta, P0);
        Real hhat = sqrt_delta * L / (2 * reg);
        if (K.unit_norm == +1) hhat *= 2;
        Real slack = exp(Real(3) * log(Real(delta) * Real(P0)) / sqrt(Real(P0)));
        Int lo = Int(ceil(Real(hhat / slack)));
        Int hi = Int(floor(Real(hhat * slack)));
        if (lo < 1) lo = 1;
        if (hi < lo) hi = lo;

        // seed the closure with <g1>, whose order comes from the BSGS kernel
        std::vector<IdealClass> seed;
        if (!gens.empty()) {
            Int ord1 = element_order_bsgs(gens.front(), hi, exec);
            IdealClass cur = principal_class(delta);
            for (Int k = 1; k < ord1; ++k) {
                cur = compose(cur, gens.front());
                seed.push_back(cur);
            }
        }

        std::vector<IdealClass> subgroup;
        try {
            subgroup = raw_closure(delta, seed, gens, hi);
        } catch (const Error& err) {
            if (err.code() == ErrorCode::GeneratorSetInsufficient && step + 1 < 4) continue;
            throw;
        }
        Int n(subgroup.size());
        std::vector<Int> multiples;
        for (Int m = (lo + n - 1) / n * n; m <= hi; m += n) multiples.push_back(m);
        if (multiples.size() != 1) {
            if (step + 1 < 4) continue;
            fail(ErrorCode::IllConditioned,
                 "truncated Euler product window does not isolate a unique class number for delta = " +
                     delta.str());
        }
        Int target = multiples.front();
        long cap = 2000;
        while (Int(subgroup.size()) < target) {
            if (gen_norms.back() >= cap)
                fail(ErrorCode::GeneratorSetInsufficient,
                     "prime forms below " + std::to_string(cap) +
                         " generate index > 1; raise the norm bound");
            extend_gens(gen_norms.back() * 2 + 10);
            subgroup = raw_closure(delta, subgroup, gens, target);
        }
        if (Int(subgroup.size()) != target)
            fail(ErrorCode::GeneratorSetInsufficient, "closure overshot the class number window");
        return SmallGroup::from_elements(delta, std::move(subgroup));
    }
    fail(ErrorCode::IllConditioned, "class number window did not stabilize");
}

WideGroup wide_group(const SmallGroup& narrow) {
    const Int& delta = narrow.delta();
    Int sigma = mod_floor(delta, 2);
    IdealClass fminus(Form{Int(-1), sigma, (delta - sigma * sigma) / 4});

    SmallGroup::CanonFn proj = [fminus](const IdealClass& c) {
        IdealClass alt = compose(c, fminus);
        return alt < c ? alt : c;
    };

    std::vector<IdealClass> reps;
    std::set<std::string> seen;
    for (const IdealClass& c : narrow.elems()) {
        IdealClass r = proj(c);
        if (seen.insert(form_key(r.canon())).second) reps.push_back(r);
    }
    WideGroup w{SmallGroup::from_elements(delta, std::move(reps), proj), {}};
    w.project.assign(narrow.size(), 0);
    for (std::size_t i = 0; i < narrow.size(); ++i)
        w.project[i] = w.group.index_of(proj(narrow.elem(i)));
    return w;
}

ClassGroup class_group(const QuadField& K, ClassGroupMode mode, Exec exec) {
    const Int& delta = K.disc.delta;
    if (mode == ClassGroupMode::enumerate && delta > kEnumerateCeiling)
        fail(ErrorCode::DiscriminantTooLarge, "delta beyond enumerate ceiling 1e7");
    if (delta > kBsgsCeiling)
        fail(ErrorCode::DiscriminantTooLarge, "delta beyond bsgs ceiling 1e12");

    SmallGroup narrow =
        (mode == ClassGroupMode::enumerate) ? narrow_group(delta, exec) : narrow_group_bsgs(K, exec);
    WideGroup wide = wide_group(narrow);

    GroupStructure ns = group_structure(narrow);
    GroupStructure ws = group_structure(wide.group);

    ClassGroup out;
    out.D = K.disc.D;
    out.delta = delta;
    out.unit_norm = K.unit_norm;
    out.h = ws.order;
    out.h_narrow = ns.order;
    out.divisors = ws.divisors;
    out.divisors_narrow = ns.divisors;
    for (std::size_t i = 0; i < ws.gens.size(); ++i)
        out.gens.push_back({wide.group.elem(ws.gens[i]).canon(), ws.divisors[i]});
    for (std::size_t i = 0; i < ns.gens.size(); ++i)
        out.gens_narrow.push_back({narrow.elem(ns.gens[i]).canon(), ns.divisors[i]});
    return out;
}

long p_rank(const ClassGroup& g, const Int& p) {
    long r = 0;
    for (const Int& d : g.divisors)
        if (d % p == 0) ++r;
    return r;
}

Int element_order_bsgs(const IdealClass& g, const Int& upper, Exec exec) {
    IdealClass e = principal_class(g.delta());
    if (g == e) return 1;
    Int m = isqrt(upper) + 1;
    long ml = static_cast<long>(m);

    std::vector<IdealClass> babies(static_cast<std::size_t>(ml));
    int nchunks = (exec == Exec::openmp) ? std::max(1, std::min<int>(max_threads(), static_cast<int>(ml / 8 + 1))) : 1;
#pragma omp parallel for schedule(static, 1) if (exec == Exec::openmp)
    for (int t = 0; t < nchunks; ++t) {
        auto [lo, hi] = chunk_of(static_cast<std::size_t>(ml), t, nchunks);
        if (lo >= hi) continue;
        IdealClass cur = power(g, Int(lo));
        for (std::size_t i = lo; i < hi; ++i) {
            babies[i] = cur;
            cur = compose(cur, g);
        }
    }
    for (std::size_t i = 1; i < babies.size(); ++i)
        if (babies[i] == e) return Int(i);

    std::unordered_map<std::string, std::size_t> table;
    table.reserve(babies.size() * 2);
    for (std::size_t i = 0; i < babies.size(); ++i) table.emplace(form_key(babies[i].canon()), i);

    IdealClass giant = power(g, m);
    IdealClass cur = giant;
    for (Int j = 1; j * m <= upper + m; ++j) {
        auto it = table.find(form_key(cur.canon()));
        if (it != table.end()) {
            Int cand = j * m - Int(it->second);
            for (auto& [q, eexp] : factorize(cand))
                for (long t = 0; t < eexp; ++t) {
                    if (power(g, cand / q) == e)
                        cand /= q;
                    else
                        break;
                }
            return cand;
        }
        cur = compose(cur, giant);
    }
    fail(ErrorCode::GeneratorSetInsufficient, "order exceeds the supplied bound");
}

std::vector<Int> fundamental_radicands(const Int& limit) {
    std::vector<Int> ds;
    for (Int d = 2; d < limit; ++d)
        if (is_square_free(d)) ds.push_back(d);
    return ds;
}

} // namespace starkcol
