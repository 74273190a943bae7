#pragma once

#include <string>
#include <vector>

namespace sedge {

enum class check_status { pass, fail, skipped };

inline const char* to_string(check_status s) {
    switch (s) {
        case check_status::pass: return "pass";
        case check_status::fail: return "fail";
        default: return "skipped";
    }
}

struct check_result {
    std::string name;
    check_status status = check_status::pass;
    std::string witness;  // mandatory for failures, reason for skips
    double millis = 0.0;
};

} // namespace sedge
