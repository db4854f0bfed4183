// Enumerate the cells of the family G_T for a diagonal-length sequence T,
// one row per partition: hook code, cell dimension, and kappa.
//
//   ./enumerate_cells            (uses T = 1,2,3,4,2)
//   ./enumerate_cells 1,2,3,3,1

#include <cstdio>
#include <string>

#include <hookcells/hilbert.hpp>
#include <hookcells/hook_code.hpp>
#include <hookcells/kappa.hpp>
#include <hookcells/partition.hpp>

int main(int argc, char** argv) {
  using namespace hookcells;
  const std::string text = argc > 1 ? argv[1] : "1,2,3,4,2";
  const HilbertFunction T = parse_hilbert(text);

  std::printf("T = %s  (order %d, socle degree %d, dim G_T = %lld)\n",
              format_hilbert(T).c_str(), T.order(), T.socle_degree(),
              dim_GT(T));
  std::printf("%-16s %-18s %9s %6s\n", "partition", "hook code", "dimension",
              "kappa");
  for (const Partition& P : enumerate_partitions(T)) {
    const HookCode code = hook_code(P);
    std::printf("%-16s %-18s %9d %6d\n", format_partition(P).c_str(),
                format_code_human(code).c_str(), code.size(), kappa(P));
  }
  return 0;
}
