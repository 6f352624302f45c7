#include "sensorfft/error.hpp"

namespace sensorfft {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Format: return "format error";
        case ErrorKind::Row: return "row error";
        case ErrorKind::InsufficientData: return "insufficient data";
        case ErrorKind::Parameter: return "parameter error";
        case ErrorKind::Selection: return "selection error";
        case ErrorKind::Verification: return "verification failure";
    }
    return "error";
}

}  // namespace sensorfft
