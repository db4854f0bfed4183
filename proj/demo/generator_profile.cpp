// For one partition, compare the minimal generators of the monomial ideal
// E_P with the generic count kappa(P) and its degree profile, then list the
// block decomposition with border and hand monomials.
//
//   ./generator_profile              (uses P = 15,12^4,11,7,6^2,5,3^4)
//   ./generator_profile 5,5,5,3,1,1,1

#include <cstdio>
#include <string>

#include <hookcells/components.hpp>
#include <hookcells/hilbert.hpp>
#include <hookcells/kappa.hpp>
#include <hookcells/partition.hpp>

namespace {

std::string profile_text(const hookcells::GeneratorProfile& profile) {
  std::string out;
  for (std::size_t i = 0; i < profile.counts.size(); ++i) {
    if (!out.empty()) out += ", ";
    out += std::to_string(profile.counts[i]) + " in degree " +
           std::to_string(profile.start_degree + static_cast<int>(i));
  }
  return out.empty() ? "none" : out;
}

std::string monomial_list(const std::vector<hookcells::Monomial>& monomials) {
  std::string out;
  for (const auto& m : monomials) {
    if (!out.empty()) out += " ";
    out += hookcells::to_string(m);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hookcells;
  const std::string text = argc > 1 ? argv[1] : "15,12^4,11,7,6^2,5,3^4";
  const Partition P = parse_partition(text);
  const HilbertFunction T = diagonal_lengths(P);

  std::printf("P = %s, T = %s\n", format_partition(P).c_str(),
              format_hilbert(T).c_str());
  std::printf("monomial ideal generators: %s\n",
              profile_text(monomial_betti(P)).c_str());
  std::printf("generic ideal generators:  %s  (kappa = %d, kappa_T = %d%s)\n",
              profile_text(beta_profile(P)).c_str(), kappa(P), kappa_T(T),
              is_special(P) ? ", special" : "");

  std::printf("blocks:\n");
  for (const Component& entry : decompose(P)) {
    std::printf("  degree %d: P_i = %-10s border %-24s hands %s\n",
                entry.degree, format_partition(entry.partition).c_str(),
                monomial_list(entry.sets.border).c_str(),
                monomial_list(entry.sets.hands).c_str());
  }
  return 0;
}
