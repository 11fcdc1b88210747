#include "hyperbolic/error.hpp"

#include <sstream>

namespace hyperbolic {

namespace {
std::string with_value(const std::string& what, const char* label, double v) {
    std::ostringstream os;
    os << what << " (" << label << " " << v << ")";
    return os.str();
}
}  // namespace

AccuracyError::AccuracyError(const std::string& what, double achieved)
    : Error(with_value(what, "achieved error", achieved)), achieved_(achieved) {}

TruncationError::TruncationError(const std::string& what, double estimate)
    : Error(with_value(what, "tail estimate", estimate)), estimate_(estimate) {}

}  // namespace hyperbolic
