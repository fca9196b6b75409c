#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cpl/class_algebra.hpp"
#include "cpl/group.hpp"

namespace cpl {

enum class TheoremId { A, B, T2_4, L4_1, T4_2, ETA_PGROUP, EX2_2, EX3_2, REMARK4 };

std::string to_string(TheoremId id);
TheoremId theorem_id_from_string(const std::string& s);

/// One failed check, with enough witness data to replay the computation.
struct CounterexampleRecord {
  std::string group_spec;
  std::string check;            // name of the computation that failed
  std::vector<int> class_reps;  // rep ids of A, B, D as applicable
  long long observed = 0;
  long long bound = 0;
  std::vector<int> witnesses;   // element ids involved
};

struct VerificationReport {
  TheoremId theorem_id = TheoremId::A;
  std::string group_spec;
  long long cases_checked = 0;
  std::vector<CounterexampleRecord> violations;
  std::map<std::string, double> extremal;
  std::vector<std::string> notes;

  bool pass() const { return violations.empty(); }
};

void to_json(nlohmann::json& j, const CounterexampleRecord& r);
void from_json(const nlohmann::json& j, CounterexampleRecord& r);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

// Theorem A: C_G(AB)/(C_G(A) n C_G(B)) is abelian, for A, B normal subsets.
// union_depth 1 checks all class pairs; depth 2 adds unions of two classes.
VerificationReport verify_theorem_A(const Group& g, int union_depth = 1);

// Theorem B: dl(C_G(D)/(C_G(A) n C_G(B))) <= 2 eta(AB) for supersolvable G,
// classes A, B and every class D inside AB. Throws NotSupersolvable.
VerificationReport verify_theorem_B(const Group& g);

// Generalized bound dl <= 1 + F(eta(AB)); the default F(n) = 2n-1 reproduces
// Theorem B's bound. Also checks the goodness premise and eta monotonicity on
// each quotient it uses. Throws NotSupersolvable.
VerificationReport verify_transfer_theorem(
    const Group& g, const std::function<int(int)>& bound_fn,
    const std::string& bound_name = "2n-1");

// [N^m, Z_m(N)] = 1 for every m up to stabilization of both series.
VerificationReport verify_lemma_4_1(const Group& g);

// If [n,a] lies in Z_m(n) for some minimal m, then n/C_n(a^n) is nilpotent
// of class at most m. Reports NoSuchM as a note, not a violation.
VerificationReport verify_theorem_4_2(const Group& g, const Subgroup& n, int a);

// In a p-group, |A| = p^n implies eta(A A^-1) >= n(p-1) + 1.
VerificationReport verify_eta_pgroup_bound(const Group& g);

// Direct product of extraspecial groups of orders p_i^3 with
// |C_G(D)/(C_G(A) n C_G(B))| = prod p_i = m and AB = D a single class.
VerificationReport reproduce_example_2_2(int m,
                                         std::size_t max_order = kDefaultMaxOrder);

// AGL(1,p): A = P \ {1} is one class, eta(AA^-1) = 2, C_G(A) = P,
// |G/C_G(A)| = p-1; records the prime-factor count of p-1.
VerificationReport reproduce_example_3_2(int p);

// The wreath-product pair G1 = C2 wr C2 and G2 = G1 wr C2 with the stated
// nilpotency classes 1 and 2 of G/C_G(a^G).
VerificationReport reproduce_remark_4();

// dl(num/den) via an explicit quotient group; the denominator is asserted
// (not assumed) normal in the numerator.
std::optional<int> harness_section_dl(const Subgroup& num, const Subgroup& den);

}  // namespace cpl
