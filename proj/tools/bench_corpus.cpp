// Times the corpus sweep (canonical-law synthesis plus checking for every
// enumerated diagram) serially and with OpenMP sharding, and verifies the
// two produce byte-identical laws.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "omegatt/lawfile.hpp"
#include "omegatt/suite.hpp"

using namespace omegatt;

namespace {

double sweep_ms(int max_cells, int max_dim, int jobs,
                std::vector<std::string>* rendered) {
  auto t0 = std::chrono::steady_clock::now();
  auto corpus = build_corpus(max_cells, max_dim, jobs);
  for (const auto& law : corpus->laws) {
    Check c = check_law(law);
    if (!c) {
      std::fprintf(stderr, "law over %s fails checking\n",
                   render_tree(law.arity).c_str());
      std::exit(1);
    }
  }
  if (rendered)
    for (const auto& law : corpus->laws)
      rendered->push_back(render_law_text(law));
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_cells = 8, max_dim = 3;
  if (argc > 1) max_cells = std::atoi(argv[1]);
  if (argc > 2) max_dim = std::atoi(argv[2]);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif

  std::vector<std::string> serial, parallel;
  double t_serial = sweep_ms(max_cells, max_dim, 1, &serial);
  double t_parallel = sweep_ms(max_cells, max_dim, threads, &parallel);

  if (serial != parallel) {
    std::fprintf(stderr, "parallel sweep differs from the serial reference\n");
    return 1;
  }

  std::printf("corpus sweep, max-cells=%d max-dim=%d (%zu laws)\n", max_cells,
              max_dim, serial.size());
  std::printf("  serial          %10.1f ms\n", t_serial);
  std::printf("  openmp x%-3d     %10.1f ms  (speedup %.2fx)\n", threads,
              t_parallel, t_parallel > 0 ? t_serial / t_parallel : 0.0);
  return 0;
}
