#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ainfree {

/* Advisory worker cap from AINFREE_THREADS, clamped to [1, 64]; unset or
   invalid values fall back to 1 with a note on `err`. The pipeline runs
   sequentially today, so any cap is honored; the hook exists so a parallel
   section can pick it up without an interface change. */
int worker_cap(std::ostream& err);

/* Driver behind the binary: trees, verify, extend, lift, report. Returns 0
   on success, 1 when a verification ran and failed, 2 on input or usage
   errors. Reports go to `out` and are deterministic for fixed inputs;
   diagnostics go to `err`. */
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ainfree
