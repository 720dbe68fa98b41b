/*!
  \file errors.hpp
  \brief Exception types thrown by the lattice synthesis library
*/
#pragma once

#include <stdexcept>
#include <string>

namespace latsyn
{

/*! \brief Base class of every error raised by this library. */
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief An integer that is not a valid literal code, or an operation undefined on it. */
class literal_error : public error
{
public:
  using error::error;
};

/*! \brief Malformed function, path, lattice or library text. */
class format_error : public error
{
public:
  using error::error;
};

/*! \brief A size guard was exceeded (lattice side, oracle universe, enumeration bound). */
class limit_error : public error
{
public:
  using error::error;
};

} // namespace latsyn
