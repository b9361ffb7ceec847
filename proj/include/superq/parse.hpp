#pragma once

#include <string>
#include <string_view>

#include "superq/superalgebra.hpp"

namespace superq {

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at offset " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses the textual polynomial grammar:
///
///     expr   := [+|-] term { (+|-) term }
///     term   := factor { * factor }
///     factor := integer [/ integer] | name [^ integer] | ( expr )
///
/// Factors are multiplied in the order written, so odd generators written
/// out of canonical order pick up their Koszul sign.
Polynomial parse_polynomial(const PresentationPtr& pres, std::string_view text);

}  // namespace superq
