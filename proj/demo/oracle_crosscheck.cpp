// Cross-check the combinatorial generator count against the exact
// linear-algebra oracle: scan the cell of a partition over a ladder of prime
// fields and compare totals and degree profiles.
//
//   ./oracle_crosscheck              (uses P = 5,3,1)
//   ./oracle_crosscheck 4,3,3,2

#include <cstdio>
#include <string>

#include <hookcells/cell_oracle.hpp>
#include <hookcells/hilbert.hpp>
#include <hookcells/kappa.hpp>
#include <hookcells/partition.hpp>

int main(int argc, char** argv) {
  using namespace hookcells;
  const std::string text = argc > 1 ? argv[1] : "5,3,1";
  const Partition P = parse_partition(text);
  const HilbertFunction T = diagonal_lengths(P);

  const CellParametrization shape = cell_parametrization(P);
  std::printf("P = %s, T = %s, cell parameters = %d\n",
              format_partition(P).c_str(), format_hilbert(T).c_str(),
              shape.parameters);

  const OracleCount report = oracle_kappa(P, 1000000);
  std::printf("oracle: GF(%d), %s, %lld tuples, %lld accepted, minimum "
              "generator count %d\n",
              report.prime, report.exhaustive ? "exhaustive" : "sampled",
              report.tuples_tested, report.accepted, report.total);

  std::printf("degree profile (oracle vs formula):\n");
  const GeneratorProfile profile = beta_profile(P);
  for (int degree = 0; degree <= T.socle_degree() + 1; ++degree) {
    const int offset = degree - profile.start_degree;
    const int expected =
        offset >= 0 && offset < static_cast<int>(profile.counts.size())
            ? profile.counts[static_cast<std::size_t>(offset)]
            : 0;
    if (expected == 0 && report.profile[static_cast<std::size_t>(degree)] == 0)
      continue;
    std::printf("  degree %d: %d vs %d\n", degree,
                report.profile[static_cast<std::size_t>(degree)], expected);
  }
  std::printf("formula kappa = %d: %s\n", kappa(P),
              report.total == kappa(P) ? "agree" : "DISAGREE");
  return 0;
}
