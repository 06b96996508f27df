#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lieinv {

// exit codes: 0 ok, 1 verification failure, 2 usage or input error, 3 needs a recipe / partial elimination
enum ExitCode { kExitOk = 0, kExitVerification = 1, kExitUsage = 2, kExitPartial = 3 };

// args excludes the program name; "-" as FILE reads from in
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace lieinv
