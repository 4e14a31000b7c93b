// Times the serial orbit enumeration against the coset-sharded kernel on
// the chain fixtures and verifies that both produce identical reports.

#include <cstdio>
#include <string>

#include "transvec/orbits.hpp"
#include "transvec/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace transvec;

int main(int argc, char** argv) {
  int threads = 0;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  if (argc > 1) threads = std::atoi(argv[1]);
  if (threads < 2) threads = 2;

  std::printf("%-10s %8s %10s %10s %8s %s\n", "fixture", "m", "serial(s)", "sharded(s)",
              "speedup", "match");
  bool all_match = true;
  for (int n = 5; n <= 7; ++n) {
    SignedWord w = lexmin_w0_word_A(n);
    SigmaGraph sg = build_sigma(w);
    SkewForm f = SkewForm::of_sigma(sg);
    auto B = sg.bounded_set();

    OrbitOptions serial_opt;
    OrbitReport serial = enumerate_orbits(f, B, serial_opt);

    OrbitOptions sharded_opt;
    sharded_opt.threads = threads;
    OrbitReport sharded = enumerate_orbits(f, B, sharded_opt);

    bool match = report_text(serial) == report_text(sharded);
    all_match = all_match && match;
    std::printf("an-w0 %-4d %8d %10.4f %10.4f %8.2f %s\n", n, serial.m, serial.seconds,
                sharded.seconds,
                sharded.seconds > 0 ? serial.seconds / sharded.seconds : 0.0,
                match ? "yes" : "NO");
  }
  if (!all_match) {
    std::printf("sharded kernel diverged from the serial reference\n");
    return 1;
  }
  return 0;
}
