#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "zhuforge/uea.hpp"
#include "zhuforge/voa.hpp"

namespace zhuforge {

/// Syntax or vocabulary error; position is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// element := term (('+'|'-') term)* ; term := [rational] (gen '[' int ']')* 'vac'
/// Modes act right to left: "a[-1]L[-2]vac" is a[-1](L[-2]vac).
FockVector parse_element(const Voa& voa, std::string_view text);

/// uexpr := uterm (('+'|'-') uterm)* ; uterm := [rational] ('J[' int ']' '(' element ')')+
UEAExpression parse_uea(const Voa& voa, std::string_view text);

}  // namespace zhuforge
