#include "rodrigues/report.hpp"

namespace rodrigues {

const char* to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::failed: return "failed";
    case Status::skipped: return "skipped";
  }
  return "?";
}

}  // namespace rodrigues
