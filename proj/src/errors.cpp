#include "dampedwaves/errors.hpp"

namespace dw {

SingularityError::SingularityError(const std::string& what, int grid_index, double x)
    : Error(what), index_(grid_index), x_(x) {}

GeometryError::GeometryError(const std::string& what, double margin)
    : Error(what), margin_(margin) {}

ContractionError::ContractionError(const std::string& what, int iterations,
                                   double last_increment)
    : Error(what), iterations_(iterations), last_(last_increment) {}

}  // namespace dw
