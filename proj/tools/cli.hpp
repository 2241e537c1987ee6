#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adcert::cli
{

// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or input error.
// `args` excludes the program name.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace adcert::cli
