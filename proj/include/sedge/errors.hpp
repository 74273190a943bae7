#pragma once

#include <stdexcept>
#include <string>

namespace sedge {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct loop_edge_error : error {
    using error::error;
};
struct vertex_out_of_range_error : error {
    using error::error;
};
struct duplicate_edge_error : error {
    using error::error;
};
struct invalid_parameter_error : error {
    using error::error;
};
struct size_limit_error : error {
    using error::error;
};
struct orientation_mismatch_error : error {
    using error::error;
};
struct labeling_mismatch_error : error {
    using error::error;
};
struct not_symmetric_error : error {
    using error::error;
};
struct degree_bound_error : error {
    using error::error;
};
struct non_integer_interpolation_error : error {
    using error::error;
};
struct precondition_error : error {
    using error::error;
};
struct parse_error : error {
    using error::error;
};

} // namespace sedge
