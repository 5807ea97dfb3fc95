#pragma once

#include <iosfwd>

namespace fano::selftest {

/// Runs the acceptance checks, printing one pass/fail line per criterion.
/// Returns the number of failed criteria.
int run_all(std::ostream& os);

}  // namespace fano::selftest
