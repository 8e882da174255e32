#pragma once

#include <stdexcept>
#include <string>

namespace stconn
{

enum class error_kind
{
  invalid_parameter,
  invalid_reference,
  budget_exceeded,
  family_violation,
  construction_failed,
  parse_error
};

/*! \brief Base exception thrown by every stconn component. */
class error : public std::runtime_error
{
public:
  error( error_kind kind, std::string const& what )
      : std::runtime_error( what ), kind_( kind )
  {
  }

  error_kind kind() const noexcept { return kind_; }

private:
  error_kind kind_;
};

inline void require( bool condition, std::string const& message )
{
  if ( !condition )
  {
    throw error( error_kind::invalid_parameter, message );
  }
}

} // namespace stconn
