#ifndef PASCENT_ERRORS_HPP
#define PASCENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pascent
{

/// Base of every exception thrown by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class invalid_parameter : public error
{
public:
    using error::error;
};

class not_invertible : public error
{
public:
    using error::error;
};

class invalid_composition : public error
{
public:
    using error::error;
};

class out_of_truncation : public error
{
public:
    using error::error;
};

class division_impossible : public error
{
public:
    using error::error;
};

class no_closed_form : public error
{
public:
    using error::error;
};

class not_in_image : public error
{
public:
    using error::error;
};

class invalid_input : public error
{
public:
    using error::error;
};

class budget_exceeded : public error
{
public:
    using error::error;
};

class unsupported : public error
{
public:
    using error::error;
};

} // namespace pascent

#endif
