#include <doctest.h>

#include "kzindex/properties.hpp"

using namespace kz;

TEST_SUITE("properties") {

TEST_CASE("randomized invariants, fixed seed") {
  for (const auto& p : run_properties(20261016)) {
    CAPTURE(p.name);
    CAPTURE(p.first_failure);
    CHECK(p.failures == 0);
    CHECK(p.cases > p.skipped);
  }
}

TEST_CASE("shear reduction agrees with separatrix tracing") {
  const PropertyResult r = cross_algorithm_check(99, 100);
  CAPTURE(r.first_failure);
  CHECK(r.cases >= 100);
  CHECK(r.ok());
}

}  // TEST_SUITE
