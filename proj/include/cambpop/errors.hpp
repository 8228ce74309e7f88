#pragma once

#include <stdexcept>
#include <string>

namespace cambpop {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define CAMBPOP_ERROR(Name)                       \
    struct Name : Error {                         \
        explicit Name(const std::string& m = #Name) : Error(m) {} \
    }

CAMBPOP_ERROR(NonFiniteType);
CAMBPOP_ERROR(GroupTooLarge);
CAMBPOP_ERROR(NotALattice);
CAMBPOP_ERROR(NotSemidistributive);
CAMBPOP_ERROR(NotAnInterval);
CAMBPOP_ERROR(NotAQuotientRepresentative);
CAMBPOP_ERROR(NotSortable);
CAMBPOP_ERROR(MaxNotUnique);
CAMBPOP_ERROR(NotSimplyLaced);
CAMBPOP_ERROR(NotSMCompatible);
CAMBPOP_ERROR(NotMaximal);
CAMBPOP_ERROR(InvalidPath);

#undef CAMBPOP_ERROR

inline void require(bool cond, const char* msg) {
    if (!cond) throw Error(msg);
}

} // namespace cambpop
