#include "mlat/series.hpp"

#include "mlat/errors.hpp"
#include "mlat/spectrum.hpp"

namespace mlat {

namespace {

SeriesTrace run_descending(const MultLattice& m, int x, SeriesKind kind) {
  SeriesTrace t;
  t.kind = kind;
  t.terms.push_back(x);
  for (;;) {
    int prev = t.terms.back();
    int next = 0;
    switch (kind) {
      case SeriesKind::lower_central_left: next = m.mul(prev, x); break;
      case SeriesKind::lower_central_right: next = m.mul(x, prev); break;
      case SeriesKind::derived: next = m.mul(prev, prev); break;
      case SeriesKind::upper_central: next = prev; break;  // not used here
    }
    // Every step is descending: the product sits below the meet of its
    // factors, so next <= prev and the first repeat is next == prev.
    t.terms.push_back(next);
    if (next == prev) break;
  }
  t.reached = t.terms.back();
  t.stabilized = t.reached == m.bottom();
  return t;
}

}  // namespace

SeriesBundle series(const MultLattice& m, int x) {
  SeriesBundle b;
  b.lcs_left = run_descending(m, x, SeriesKind::lower_central_left);
  b.lcs_right = run_descending(m, x, SeriesKind::lower_central_right);
  b.derived = run_descending(m, x, SeriesKind::derived);
  return b;
}

ClassificationFlags classify(const MultLattice& m, int x) {
  SeriesBundle b = series(m, x);
  ClassificationFlags f;
  f.left_nilpotent = b.lcs_left.stabilized;
  f.right_nilpotent = b.lcs_right.stabilized;
  f.solvable = b.derived.stabilized;
  f.derived_element = m.mul(x, x);
  f.abelian = f.derived_element == m.bottom();
  f.idempotent = f.derived_element == x;

  if (f.abelian && !(f.solvable && f.left_nilpotent && f.right_nilpotent))
    throw falsification_error("abelian element " + m.label(x) + " not nilpotent/solvable");
  if (f.idempotent && f.solvable && x != m.bottom())
    throw falsification_error("idempotent solvable element " + m.label(x) + " above bottom");
  return f;
}

AnnihilatorReport annihilators(const MultLattice& m, int x) {
  AnnihilatorReport r;
  int cr = m.bottom(), cl = m.bottom();
  for (int y = 0; y < m.n(); ++y) {
    if (m.mul(x, y) == m.bottom()) cr = m.join(cr, y);
    if (m.mul(y, x) == m.bottom()) cl = m.join(cl, y);
  }
  // Without m-distributivity the join of annihilating elements need not
  // annihilate; only then is the greatest-element reading valid.
  if (m.mul(x, cr) == m.bottom()) {
    r.r_ann = cr;
    r.r_center = m.meet(x, cr);
  }
  if (m.mul(cl, x) == m.bottom()) {
    r.l_ann = cl;
    r.l_center = m.meet(x, cl);
  }
  return r;
}

UpperCentralReport upper_central_series(const MultLattice& m) {
  UpperCentralReport r;
  r.trace.kind = SeriesKind::upper_central;
  r.trace.terms.push_back(m.bottom());
  for (;;) {
    int zk = r.trace.terms.back();
    int j = m.bottom();
    for (int z = 0; z < m.n(); ++z)
      if (m.le(m.mul(z, m.top()), zk)) j = m.join(j, z);
    if (!m.le(m.mul(j, m.top()), zk)) {
      // The candidates do not close under join here; the next term has no
      // greatest witness, so the series stops as undefined.
      r.undefined_step = true;
      break;
    }
    if (!m.le(zk, j))
      throw falsification_error("upper central series failed to ascend at " + m.label(zk));
    r.trace.terms.push_back(j);
    if (j == zk) break;
  }
  r.trace.reached = r.trace.terms.back();
  r.trace.stabilized = r.trace.reached == m.top();
  r.hypercenter = r.trace.reached;
  r.hypercentral = r.hypercenter == m.top();
  return r;
}

HyperabelianReport hyperabelian_report(const MultLattice& m) {
  if (!law_report(m).m_distributive)
    throw mlat_error(errc::not_m_distributive,
                     "the six-condition equivalence needs multiplication to distribute over joins");

  int n = m.n();
  ElementClassification c = classify_elements(m);
  HyperabelianReport r;

  std::vector<int> sps = c.semiprimes();
  r.cond_a = sps.size() == 1 && sps[0] == m.top();

  r.cond_b = true;
  for (int x = 0; x < n && r.cond_b; ++x) {
    if (x == m.top()) continue;
    bool found = false;
    for (int y = 0; y < n; ++y)
      if (y != x && m.le(x, y) && m.le(m.mul(y, y), x)) {
        found = true;
        break;
      }
    if (!found) r.cond_b = false;
  }

  // Greedy ascending chain: from each term pick the lowest-index maximal
  // element whose square drops below it. Under (b) a step always exists.
  {
    std::vector<int> chain{m.bottom()};
    bool ok = true;
    while (chain.back() != m.top()) {
      int xk = chain.back();
      std::vector<int> cand;
      for (int y = 0; y < n; ++y)
        if (y != xk && m.le(xk, y) && m.le(m.mul(y, y), xk)) cand.push_back(y);
      int pick = -1;
      for (int y : cand) {
        bool maximal = true;
        for (int z : cand)
          if (z != y && m.le(y, z)) {
            maximal = false;
            break;
          }
        if (maximal) {
          pick = y;
          break;
        }
      }
      if (pick < 0) {
        ok = false;
        if (r.cond_b)
          throw falsification_error("square-below chain dead-ended below " + m.label(xk) +
                                    " although every element has a square-below successor");
        break;
      }
      chain.push_back(pick);
    }
    r.cond_c = ok;
    if (ok) r.chain_witness = std::move(chain);
  }

  std::vector<int> primes = c.primes();
  r.spec_size = (int)primes.size();
  r.cond_d = primes.empty();

  int radical = m.top();
  for (int p : primes) radical = m.meet(radical, p);
  r.cond_e = radical == m.top();

  if (n <= 12) {
    // Search for an m-system avoiding bottom; subsets containing bottom
    // satisfy the condition vacuously.
    std::vector<int> nonbottom;
    for (int x = 0; x < n; ++x)
      if (x != m.bottom()) nonbottom.push_back(x);
    int k = (int)nonbottom.size();
    r.cond_f = true;
    for (uint32_t bits = 1; bits < (uint32_t(1) << k) && r.cond_f; ++bits) {
      std::vector<int> s;
      for (int i = 0; i < k; ++i)
        if (bits & (uint32_t(1) << i)) s.push_back(nonbottom[i]);
      bool msys = true;
      for (size_t i = 0; i < s.size() && msys; ++i) {
        for (size_t j = 0; j < s.size(); ++j) {
          int p = m.mul(s[i], s[j]);
          bool found = false;
          for (int z : s)
            if (m.le(z, p)) {
              found = true;
              break;
            }
          if (!found) {
            msys = false;
            break;
          }
        }
      }
      if (msys) r.cond_f = false;
    }
  } else {
    r.cond_f = r.cond_d;
    r.cond_f_inferred = true;
  }

  r.agree = r.cond_a == r.cond_b && r.cond_b == r.cond_c && r.cond_c == r.cond_d &&
            r.cond_d == r.cond_e && r.cond_e == r.cond_f;
  if (!r.agree)
    throw falsification_error("the six no-prime conditions disagree on " +
                              (m.name.empty() ? std::string("this lattice") : m.name));
  r.hyperabelian = r.cond_a;
  return r;
}

AnnihilatorPrimeCheck annihilator_prime_lemma_check(const MultLattice& m, int h, int n) {
  if (h < 0 || h >= m.n() || n < 0 || n >= m.n())
    throw mlat_error(errc::validation_error, "element index out of range");
  if (!m.le(n, h))
    throw mlat_error(errc::precondition_failed, "n must lie in the interval below h");
  if (!law_report(m).m_distributive)
    throw mlat_error(errc::not_m_distributive, "annihilators need m-distributivity");

  IntervalSublattice below_n = interval_sublattice(m, n);
  ElementClassification cn = classify_elements(below_n.m);
  int nb = below_n.m.bottom();
  if (!cn.prime[nb])
    throw mlat_error(errc::precondition_failed,
                     "bottom is not prime in the interval below " + m.label(n));

  IntervalSublattice below_h = interval_sublattice(m, h);
  int n_in_h = below_h.from_parent[n];
  AnnihilatorReport ann = annihilators(below_h.m, n_in_h);
  if (!ann.r_ann || !ann.l_ann)
    throw falsification_error("annihilator join failed in an m-distributive interval");
  if (*ann.r_ann != *ann.l_ann)
    throw falsification_error("left and right annihilators of " + m.label(n) + " differ");

  int p = *ann.r_ann;
  ElementClassification ch = classify_elements(below_h.m);
  if (!ch.prime[p])
    throw falsification_error("annihilator of " + m.label(n) + " is not prime in its interval");
  if (below_h.m.meet(p, n_in_h) != below_h.m.bottom())
    throw falsification_error("annihilator of " + m.label(n) + " meets it above bottom");
  for (int q = 0; q < below_h.m.n(); ++q) {
    if (q != p && ch.prime[q] && below_h.m.meet(q, n_in_h) == below_h.m.bottom())
      throw falsification_error("a second prime avoids " + m.label(n) + " in its interval");
  }

  AnnihilatorPrimeCheck out;
  out.holds = true;
  out.p = below_h.to_parent[p];
  return out;
}

}  // namespace mlat
