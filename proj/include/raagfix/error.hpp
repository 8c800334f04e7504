#pragma once

#include <stdexcept>
#include <string>

namespace raagfix {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace raagfix
