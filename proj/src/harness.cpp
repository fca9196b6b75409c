#include "cpl/harness.hpp"

#include <algorithm>
#include <deque>

#include "cpl/constructions.hpp"
#include "cpl/numeric.hpp"
#include "cpl/series.hpp"

namespace cpl {

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::A: return "A";
    case TheoremId::B: return "B";
    case TheoremId::T2_4: return "T2.4";
    case TheoremId::L4_1: return "L4.1";
    case TheoremId::T4_2: return "T4.2";
    case TheoremId::ETA_PGROUP: return "ETA_PGROUP";
    case TheoremId::EX2_2: return "EX2.2";
    case TheoremId::EX3_2: return "EX3.2";
    case TheoremId::REMARK4: return "REMARK4";
  }
  return "?";
}

TheoremId theorem_id_from_string(const std::string& s) {
  for (TheoremId id : {TheoremId::A, TheoremId::B, TheoremId::T2_4,
                       TheoremId::L4_1, TheoremId::T4_2, TheoremId::ETA_PGROUP,
                       TheoremId::EX2_2, TheoremId::EX3_2, TheoremId::REMARK4})
    if (to_string(id) == s) return id;
  throw Error("unknown theorem id: " + s);
}

void to_json(nlohmann::json& j, const CounterexampleRecord& r) {
  j = nlohmann::json{{"group_spec", r.group_spec}, {"check", r.check},
                     {"class_reps", r.class_reps}, {"observed", r.observed},
                     {"bound", r.bound},           {"witnesses", r.witnesses}};
}

void from_json(const nlohmann::json& j, CounterexampleRecord& r) {
  j.at("group_spec").get_to(r.group_spec);
  j.at("check").get_to(r.check);
  j.at("class_reps").get_to(r.class_reps);
  j.at("observed").get_to(r.observed);
  j.at("bound").get_to(r.bound);
  j.at("witnesses").get_to(r.witnesses);
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"theorem_id", to_string(r.theorem_id)},
                     {"group_spec", r.group_spec},
                     {"cases_checked", r.cases_checked},
                     {"violations", r.violations},
                     {"extremal", r.extremal},
                     {"notes", r.notes},
                     {"pass", r.pass()}};
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  r.theorem_id = theorem_id_from_string(j.at("theorem_id").get<std::string>());
  j.at("group_spec").get_to(r.group_spec);
  j.at("cases_checked").get_to(r.cases_checked);
  j.at("violations").get_to(r.violations);
  j.at("extremal").get_to(r.extremal);
  j.at("notes").get_to(r.notes);
}

std::optional<int> harness_section_dl(const Subgroup& num, const Subgroup& den) {
  return section_derived_length(num, den);
}

namespace {

void record(VerificationReport& rep, const std::string& check,
            std::vector<int> class_reps, long long observed, long long bound,
            std::vector<int> witnesses = {}) {
  rep.violations.push_back(CounterexampleRecord{
      rep.group_spec, check, std::move(class_reps), observed, bound,
      std::move(witnesses)});
}

void bump_max(VerificationReport& rep, const std::string& key, double value) {
  auto it = rep.extremal.find(key);
  if (it == rep.extremal.end() || value > it->second)
    rep.extremal[key] = value;
}

}  // namespace

VerificationReport verify_theorem_A(const Group& g, int union_depth) {
  if (union_depth < 1) throw Error("verify_theorem_A: union_depth must be >= 1");
  VerificationReport rep;
  rep.theorem_id = TheoremId::A;
  rep.group_spec = g.name();

  std::vector<ConjugacyClass> classes = all_conjugacy_classes(g);
  // Scope: single classes, plus unions of two distinct classes at depth 2.
  std::vector<std::vector<int>> subsets;
  std::vector<std::vector<int>> reps;  // constituent rep ids per subset
  for (const auto& c : classes) {
    subsets.push_back(c.members);
    reps.push_back({c.rep_id});
  }
  if (union_depth >= 2) {
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        std::vector<int> u;
        std::merge(classes[i].members.begin(), classes[i].members.end(),
                   classes[j].members.begin(), classes[j].members.end(),
                   std::back_inserter(u));
        subsets.push_back(std::move(u));
        reps.push_back({classes[i].rep_id, classes[j].rep_id});
      }
  }

  std::vector<Subgroup> cents;
  cents.reserve(subsets.size());
  for (const auto& s : subsets) cents.push_back(centralizer_of_subset(g, s));

  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = 0; j < subsets.size(); ++j) {
      std::vector<int> ab = product_of_subsets(g, subsets[i], subsets[j]);
      Subgroup n = centralizer_of_subset(g, ab);
      Subgroup isect = intersect(cents[i], cents[j]);
      std::vector<int> pair_reps = reps[i];
      pair_reps.insert(pair_reps.end(), reps[j].begin(), reps[j].end());
      ++rep.cases_checked;

      if (!is_subset(isect, n)) {
        record(rep, "intersection_inside_centralizer_of_product", pair_reps,
               static_cast<long long>(isect.size()),
               static_cast<long long>(n.size()));
        continue;
      }
      std::optional<int> dl;
      try {
        dl = harness_section_dl(n, isect);
      } catch (const NotNormal&) {
        record(rep, "denominator_normal_in_numerator", pair_reps, 0, 1);
        continue;
      }
      long long observed = dl ? *dl : -1;
      if (!dl || *dl > 1)
        record(rep, "section_abelian", pair_reps, observed, 1);
      bump_max(rep, "max_section_order",
               static_cast<double>(n.size() / isect.size()));
      if (dl) bump_max(rep, "max_section_dl", static_cast<double>(*dl));
    }
  }
  return rep;
}

namespace {

struct ClassData {
  std::vector<ConjugacyClass> classes;
  std::vector<Subgroup> centralizers;
  std::map<int, std::size_t> by_rep;  // rep id -> class index
};

ClassData class_data(const Group& g) {
  ClassData d{all_conjugacy_classes(g), {}, {}};
  for (std::size_t i = 0; i < d.classes.size(); ++i) {
    d.centralizers.push_back(centralizer_of_subset(g, d.classes[i].members));
    d.by_rep[d.classes[i].rep_id] = i;
  }
  return d;
}

}  // namespace

VerificationReport verify_theorem_B(const Group& g) {
  if (!is_supersolvable(g))
    throw NotSupersolvable("verify_theorem_B: " + g.name() +
                           " is not supersolvable");
  VerificationReport rep;
  rep.theorem_id = TheoremId::B;
  rep.group_spec = g.name();

  ClassData d = class_data(g);
  for (std::size_t i = 0; i < d.classes.size(); ++i) {
    for (std::size_t j = 0; j < d.classes.size(); ++j) {
      std::vector<int> ab = product_of_subsets(g, d.classes[i].members,
                                               d.classes[j].members);
      ClassProductReport prod = decompose_normal_subset(g, ab);
      Subgroup isect = intersect(d.centralizers[i], d.centralizers[j]);
      for (int d_rep : prod.constituents) {
        const Subgroup& n = d.centralizers[d.by_rep.at(d_rep)];
        ++rep.cases_checked;
        std::optional<int> dl;
        try {
          dl = harness_section_dl(n, isect);
        } catch (const NotNormal&) {
          record(rep, "denominator_normal_in_numerator",
                 {d.classes[i].rep_id, d.classes[j].rep_id, d_rep}, 0, 1);
          continue;
        }
        long long bound = 2ll * prod.eta;
        if (!dl || *dl > bound) {
          record(rep, "section_dl_at_most_2eta",
                 {d.classes[i].rep_id, d.classes[j].rep_id, d_rep},
                 dl ? *dl : -1, bound);
        } else {
          bump_max(rep, "max_dl_over_2eta",
                   static_cast<double>(*dl) / static_cast<double>(bound));
          bump_max(rep, "max_section_dl", static_cast<double>(*dl));
        }
        bump_max(rep, "max_eta", static_cast<double>(prod.eta));
      }
    }
  }
  return rep;
}

VerificationReport verify_transfer_theorem(
    const Group& g, const std::function<int(int)>& bound_fn,
    const std::string& bound_name) {
  if (!is_supersolvable(g))
    throw NotSupersolvable("verify_transfer_theorem: " + g.name() +
                           " is not supersolvable");
  VerificationReport rep;
  rep.theorem_id = TheoremId::T2_4;
  rep.group_spec = g.name();
  rep.notes.push_back("bound function F(n) = " + bound_name);

  ClassData d = class_data(g);

  // Quotient G/C_G(C_G(D)) is reused across pairs sharing D.
  std::map<std::size_t, QuotientGroup> quotients;
  auto quotient_for = [&](std::size_t d_idx) -> const QuotientGroup& {
    auto it = quotients.find(d_idx);
    if (it != quotients.end()) return it->second;
    Subgroup c = centralizer_of_subset(g, d.centralizers[d_idx].members());
    return quotients.emplace(d_idx, quotient(g, c)).first->second;
  };

  for (std::size_t i = 0; i < d.classes.size(); ++i) {
    for (std::size_t j = 0; j < d.classes.size(); ++j) {
      std::vector<int> ab = product_of_subsets(g, d.classes[i].members,
                                               d.classes[j].members);
      ClassProductReport prod = decompose_normal_subset(g, ab);
      Subgroup isect = intersect(d.centralizers[i], d.centralizers[j]);
      const long long bound = 1 + bound_fn(prod.eta);

      for (int d_rep : prod.constituents) {
        std::size_t d_idx = d.by_rep.at(d_rep);
        const Subgroup& n = d.centralizers[d_idx];
        ++rep.cases_checked;
        std::vector<int> triple = {d.classes[i].rep_id, d.classes[j].rep_id,
                                   d_rep};

        std::optional<int> dl = harness_section_dl(n, isect);
        if (!dl || *dl > bound)
          record(rep, "section_dl_at_most_1_plus_F_eta", triple, dl ? *dl : -1,
                 bound);

        // Premise checks on the quotient the proof passes through.
        const QuotientGroup& q = quotient_for(d_idx);
        for (std::size_t k : {i, j}) {
          ConjugacyClass img = conjugacy_class_of(
              q.group, q.projection[d.classes[k].rep_id]);
          Subgroup cq = centralizer_of_subset(q.group, img.members);
          std::optional<int> dlq =
              harness_section_dl(whole_group(q.group), cq);
          int eta_self = eta(q.group, img, inverse_class(q.group, img));
          if (!dlq || *dlq > bound_fn(eta_self))
            record(rep, "goodness_premise", triple, dlq ? *dlq : -1,
                   bound_fn(eta_self),
                   {d.classes[k].rep_id});
          ConjugacyClass img_other = conjugacy_class_of(
              q.group, q.projection[d.classes[k == i ? j : i].rep_id]);
          int eta_image = eta(q.group, img, img_other);
          if (eta_image > prod.eta)
            record(rep, "eta_quotient_monotonicity", triple, eta_image,
                   prod.eta);
        }
        if (dl) bump_max(rep, "max_section_dl", static_cast<double>(*dl));
      }
    }
  }
  return rep;
}

VerificationReport verify_lemma_4_1(const Group& g) {
  VerificationReport rep;
  rep.theorem_id = TheoremId::L4_1;
  rep.group_spec = g.name();

  SeriesReport lcs = lower_central_series(g);
  SeriesReport ucs = upper_central_series(g);
  std::size_t sweep = std::max(lcs.terms.size(), ucs.terms.size());
  for (std::size_t m = 1; m <= sweep; ++m) {
    // N^m clamps at the stabilized tail; Z_m clamps at the hypercenter.
    const Subgroup& nm = lcs.terms[std::min(m - 1, lcs.terms.size() - 1)];
    const Subgroup& zm = ucs.terms[std::min(m, ucs.terms.size() - 1)];
    ++rep.cases_checked;
    Subgroup comm = commutator_subgroup(g, nm, zm);
    if (!comm.is_trivial())
      record(rep, "commutator_lower_upper_trivial", {},
             static_cast<long long>(comm.size()), 1,
             {static_cast<int>(m)});
  }
  return rep;
}

VerificationReport verify_theorem_4_2(const Group& g, const Subgroup& n,
                                      int a) {
  if (!is_normal(g, n))
    throw NotNormal("verify_theorem_4_2: subgroup is not normal in " +
                    g.name());
  g.check_id(a);
  VerificationReport rep;
  rep.theorem_id = TheoremId::T4_2;
  rep.group_spec = g.name();

  SubgroupAsGroup mat = materialize(n);
  auto to_parent_set = [&](const Subgroup& s) {
    std::vector<int> ids;
    for (int id : s.members()) ids.push_back(mat.to_parent[id]);
    return ids;
  };

  // Upper central series of N, expressed in parent ids.
  SeriesReport ucs = upper_central_series(mat.group);
  std::vector<std::vector<int>> centers;
  for (const Subgroup& z : ucs.terms) centers.push_back(to_parent_set(z));

  // [N, a] as a set of commutators.
  std::vector<int> comm_set;
  {
    std::vector<char> seen(g.order(), 0);
    for (int x : n.members()) {
      int c = g.mul(g.mul(g.mul(g.inv(x), g.inv(a)), x), a);
      if (!seen[c]) {
        seen[c] = 1;
        comm_set.push_back(c);
      }
    }
    std::sort(comm_set.begin(), comm_set.end());
  }

  std::optional<int> minimal_m;
  for (std::size_t m = 0; m < centers.size(); ++m) {
    if (std::includes(centers[m].begin(), centers[m].end(), comm_set.begin(),
                      comm_set.end())) {
      minimal_m = static_cast<int>(m);
      break;
    }
  }
  ++rep.cases_checked;
  if (!minimal_m) {
    rep.notes.push_back("NoSuchM: [N,a] is not contained in any Z_m(N); the "
                        "hypothesis is unmet for element " + std::to_string(a));
    return rep;
  }
  rep.extremal["minimal_m"] = static_cast<double>(*minimal_m);

  // a^N, the orbit of a under N-conjugation.
  std::vector<int> orbit;
  {
    std::vector<char> in(g.order(), 0);
    std::deque<int> todo{a};
    in[a] = 1;
    std::vector<int> ngens = n.small_generating_set();
    while (!todo.empty()) {
      int cur = todo.front();
      todo.pop_front();
      orbit.push_back(cur);
      for (int s : ngens) {
        int c = g.conj(cur, s);
        if (!in[c]) {
          in[c] = 1;
          todo.push_back(c);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
  }
  Subgroup c_sub = intersect(centralizer_of_subset(g, orbit), n);

  // class(N/C) = least c with N^{c+1} contained in C.
  SeriesReport lcs = lower_central_series(mat.group);
  std::optional<int> achieved;
  for (std::size_t t = 0; t < lcs.terms.size(); ++t) {
    std::vector<int> term = to_parent_set(lcs.terms[t]);
    if (std::includes(c_sub.members().begin(), c_sub.members().end(),
                      term.begin(), term.end())) {
      achieved = static_cast<int>(t);
      break;
    }
  }
  if (!achieved) {
    record(rep, "quotient_nilpotent", {}, -1, *minimal_m, {a});
    return rep;
  }
  rep.extremal["achieved_class"] = static_cast<double>(*achieved);
  if (*achieved > *minimal_m)
    record(rep, "nilpotency_class_at_most_m", {}, *achieved, *minimal_m, {a});
  return rep;
}

VerificationReport verify_eta_pgroup_bound(const Group& g) {
  auto pp = as_prime_power(g.order());
  if (!pp)
    throw NotPGroup("verify_eta_pgroup_bound: |" + g.name() + "| = " +
                    std::to_string(g.order()) + " is not a prime power");
  VerificationReport rep;
  rep.theorem_id = TheoremId::ETA_PGROUP;
  rep.group_spec = g.name();

  const long long p = static_cast<long long>(pp->prime);
  double min_slack = 1e18;
  for (const ConjugacyClass& a : all_conjugacy_classes(g)) {
    ++rep.cases_checked;
    auto size_pp = as_prime_power(a.size());
    int n = 0;
    if (a.size() != 1) {
      if (!size_pp || size_pp->prime != pp->prime) {
        record(rep, "class_size_is_p_power", {a.rep_id},
               static_cast<long long>(a.size()), p);
        continue;
      }
      n = size_pp->exponent;
    }
    int e = eta(g, a, inverse_class(g, a));
    long long bound = static_cast<long long>(n) * (p - 1) + 1;
    if (e < bound)
      record(rep, "eta_self_product_lower_bound", {a.rep_id}, e, bound);
    else
      min_slack = std::min(min_slack, static_cast<double>(e - bound));
  }
  if (rep.cases_checked > 0 && min_slack < 1e18)
    rep.extremal["min_slack"] = min_slack;
  return rep;
}

VerificationReport reproduce_example_2_2(int m, std::size_t max_order) {
  if (m < 2) throw Error("reproduce_example_2_2: m must be >= 2");
  std::vector<std::uint64_t> primes = prime_factors(m);

  VerificationReport rep;
  rep.theorem_id = TheoremId::EX2_2;

  // G = product of extraspecial groups of order p_i^3 (exponent-p type;
  // p = 2 contributes D8), with a_i, b_i noncommuting in each factor.
  std::optional<Group> big;
  std::optional<Permutation> a_perm, b_perm;
  for (std::uint64_t p : primes) {
    Group factor = extraspecial_p_cubed(static_cast<int>(p),
                                        ExtraspecialType::exponent_p, max_order);
    int ai = -1, bi = -1;
    for (std::size_t x = 0; x < factor.order() && ai < 0; ++x)
      for (std::size_t y = x + 1; y < factor.order(); ++y)
        if (factor.mul(static_cast<int>(x), static_cast<int>(y)) !=
            factor.mul(static_cast<int>(y), static_cast<int>(x))) {
          ai = static_cast<int>(x);
          bi = static_cast<int>(y);
          break;
        }
    const Permutation& ap = factor.element(ai);
    const Permutation& bp = factor.element(bi);
    if (!big) {
      a_perm = ap;
      b_perm = bp;
      big = std::move(factor);
    } else {
      int dg = big->degree();
      auto combine = [dg](const Permutation& x, const Permutation& y) {
        std::vector<int> images(x.images());
        for (int i = 0; i < y.degree(); ++i) images.push_back(dg + y[i]);
        return Permutation(std::move(images));
      };
      a_perm = combine(*a_perm, ap);
      b_perm = combine(*b_perm, bp);
      big = direct_product(*big, factor, max_order);
    }
  }
  const Group& g = *big;
  rep.group_spec = g.name();

  long long prod_p = 1, prod_p2 = 1;
  for (std::uint64_t p : primes) {
    prod_p *= static_cast<long long>(p);
    prod_p2 *= static_cast<long long>(p) * static_cast<long long>(p);
  }

  const int a = g.index_of(*a_perm);
  const int b = g.index_of(*b_perm);
  const int ab = g.mul(a, b);

  Subgroup z = center(g);
  ConjugacyClass ca = conjugacy_class_of(g, a);
  ConjugacyClass cb = conjugacy_class_of(g, b);
  ConjugacyClass cd = conjugacy_class_of(g, ab);

  auto coset = [&](int x) {
    std::vector<int> out;
    for (int zz : z.members()) out.push_back(g.mul(x, zz));
    std::sort(out.begin(), out.end());
    return out;
  };

  auto check = [&](const std::string& name, long long observed,
                   long long expected, std::vector<int> reps = {}) {
    ++rep.cases_checked;
    if (observed != expected)
      record(rep, name, std::move(reps), observed, expected, {a, b, ab});
  };

  check("center_order", static_cast<long long>(z.size()), prod_p);
  check("class_A_equals_aZ", ca.members == coset(a) ? 1 : 0, 1, {ca.rep_id});
  check("class_B_equals_bZ", cb.members == coset(b) ? 1 : 0, 1, {cb.rep_id});

  std::vector<int> prod_ab = product_of_subsets(g, ca.members, cb.members);
  check("AB_equals_D", prod_ab == cd.members ? 1 : 0, 1,
        {ca.rep_id, cb.rep_id, cd.rep_id});
  check("eta_AB", decompose_normal_subset(g, prod_ab).eta, 1,
        {ca.rep_id, cb.rep_id});

  Subgroup cent_a = centralizer_of_subset(g, ca.members);
  Subgroup cent_b = centralizer_of_subset(g, cb.members);
  Subgroup cent_d = centralizer_of_subset(g, cd.members);
  Subgroup isect = intersect(cent_a, cent_b);
  check("intersection_equals_center", isect == z ? 1 : 0, 1);
  check("centralizer_D_order", static_cast<long long>(cent_d.size()), prod_p2,
        {cd.rep_id});

  std::optional<int> dl = harness_section_dl(cent_d, isect);
  check("section_abelian", dl && *dl <= 1 ? 1 : 0, 1);
  check("section_order", static_cast<long long>(cent_d.size() / isect.size()),
        static_cast<long long>(m));

  rep.extremal["group_order"] = static_cast<double>(g.order());
  rep.extremal["quotient_order"] =
      static_cast<double>(cent_d.size() / isect.size());
  return rep;
}

VerificationReport reproduce_example_3_2(int p) {
  if (p < 3) throw Error("reproduce_example_3_2: p must be an odd prime");
  Group g = affine_prime(p);
  VerificationReport rep;
  rep.theorem_id = TheoremId::EX3_2;
  rep.group_spec = g.name();

  // The translation x -> x + 1 generates P, the normal subgroup of order p.
  std::vector<int> trans(p);
  for (int i = 0; i < p; ++i) trans[i] = (i + 1) % p;
  int t = g.index_of(Permutation(trans));
  Subgroup pgroup = subgroup_generated(g, {t});
  ConjugacyClass a = conjugacy_class_of(g, t);

  auto check = [&](const std::string& name, long long observed,
                   long long expected) {
    ++rep.cases_checked;
    if (observed != expected)
      record(rep, name, {a.rep_id}, observed, expected, {t});
  };

  std::vector<int> p_minus_identity;
  for (int id : pgroup.members())
    if (id != g.identity_id()) p_minus_identity.push_back(id);
  check("A_is_P_minus_identity", a.members == p_minus_identity ? 1 : 0, 1);

  ConjugacyClass a_inv = inverse_class(g, a);
  std::vector<int> self_prod = product_of_subsets(g, a.members, a_inv.members);
  check("AAinv_equals_P", self_prod == pgroup.members() ? 1 : 0, 1);
  check("eta_AAinv", decompose_normal_subset(g, self_prod).eta, 2);

  Subgroup cent = centralizer_of_subset(g, a.members);
  check("centralizer_A_is_P", cent == pgroup ? 1 : 0, 1);
  check("index_of_centralizer",
        static_cast<long long>(g.order() / cent.size()), p - 1);

  rep.extremal["index"] = static_cast<double>(p - 1);
  rep.extremal["prime_factors_of_index"] =
      static_cast<double>(distinct_prime_factor_count(p - 1));
  return rep;
}

VerificationReport reproduce_remark_4() {
  VerificationReport rep;
  rep.theorem_id = TheoremId::REMARK4;
  rep.group_spec = "wr(C2,2); wr(wr(C2,2),2)";

  auto check = [&](const std::string& name, long long observed,
                   long long expected, std::vector<int> witnesses = {}) {
    ++rep.cases_checked;
    if (observed != expected)
      record(rep, name, {}, observed, expected, std::move(witnesses));
  };

  Group g1 = parse_group_spec("wr(C2,2)").resolved;
  check("G1_order", static_cast<long long>(g1.order()), 8);
  check("G1_nonabelian", g1.is_abelian() ? 1 : 0, 0);

  Subgroup z1 = center(g1);
  int a1 = -1;
  for (std::size_t i = 0; i < g1.order(); ++i)
    if (!z1.contains(static_cast<int>(i))) {
      a1 = static_cast<int>(i);
      break;
    }
  ConjugacyClass c1 = conjugacy_class_of(g1, a1);
  std::vector<int> a1z;
  for (int zz : z1.members()) a1z.push_back(g1.mul(a1, zz));
  std::sort(a1z.begin(), a1z.end());
  check("a1_class_equals_a1Z", c1.members == a1z ? 1 : 0, 1, {a1});

  Subgroup cent1 = centralizer_of_subset(g1, c1.members);
  std::optional<int> class1 = nilpotency_class(quotient(g1, cent1).group);
  check("G1_section_class", class1 ? *class1 : -1, 1, {a1});

  Group g2 = parse_group_spec("wr(wr(C2,2),2)").resolved;
  check("G2_order", static_cast<long long>(g2.order()), 128);

  // a2 = (a1, a1) in the base G1 x G1: a1 acting on both blocks.
  const Permutation& a1p = g1.element(a1);
  std::vector<int> images(8);
  for (int j = 0; j < 4; ++j) {
    images[j] = a1p[j];
    images[4 + j] = 4 + a1p[j];
  }
  int a2 = g2.index_of(Permutation(std::move(images)));

  ConjugacyClass c2 = conjugacy_class_of(g2, a2);
  Subgroup z2_1 = ith_center(g2, 1);
  Subgroup z2_2 = ith_center(g2, 2);
  auto inside_coset = [&](const Subgroup& z) {
    for (int x : c2.members)
      if (!z.contains(g2.mul(g2.inv(a2), x))) return false;
    return true;
  };
  check("a2_class_inside_a2_Z2", inside_coset(z2_2) ? 1 : 0, 1, {a2});
  check("a2_class_not_inside_a2_Z1", inside_coset(z2_1) ? 1 : 0, 0, {a2});

  Subgroup cent2 = centralizer_of_subset(g2, c2.members);
  std::optional<int> class2 = nilpotency_class(quotient(g2, cent2).group);
  check("G2_section_class", class2 ? *class2 : -1, 2, {a2});

  return rep;
}

}  // namespace cpl
