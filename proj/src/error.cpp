#include "skb/error.hpp"

#include <sstream>

namespace skb
{

std::string_view to_string(Errc code)
{
  switch (code) {
  case Errc::OutOfRange: return "OutOfRange";
  case Errc::BadUnit: return "BadUnit";
  case Errc::NotLatin: return "NotLatin";
  case Errc::NoInverse: return "NoInverse";
  case Errc::NotAssociative: return "NotAssociative";
  case Errc::NotAction: return "NotAction";
  case Errc::NotEndomorphism: return "NotEndomorphism";
  case Errc::OrderMismatch: return "OrderMismatch";
  case Errc::UnitMismatch: return "UnitMismatch";
  case Errc::DistributivityFailed: return "DistributivityFailed";
  case Errc::OrderTooLarge: return "OrderTooLarge";
  case Errc::InternalLemmaViolation: return "InternalLemmaViolation";
  case Errc::InternalAxiomViolation: return "InternalAxiomViolation";
  case Errc::AxiomsFailed: return "AxiomsFailed";
  case Errc::ResultNotBrace: return "ResultNotBrace";
  case Errc::NotSubgroup: return "NotSubgroup";
  case Errc::CocycleFailed: return "CocycleFailed";
  case Errc::NotEquivariant: return "NotEquivariant";
  case Errc::InvalidAction: return "InvalidAction";
  case Errc::NotBraided: return "NotBraided";
  case Errc::NotGeneralizedBraided: return "NotGeneralizedBraided";
  case Errc::NotBraidCommuting: return "NotBraidCommuting";
  case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

std::string format_witness(Witness const &w)
{
  std::ostringstream ss;
  ss << '(';
  for (std::size_t i = 0; i < w.size(); ++i)
    ss << (i ? "," : "") << w[i];
  ss << ')';
  return ss.str();
}

namespace
{

std::string compose_message(Errc code, std::string const &detail, Witness const &w)
{
  std::string msg(to_string(code));
  if (!detail.empty())
    msg += ": " + detail;
  if (!w.empty())
    msg += " at " + format_witness(w);
  return msg;
}

} // namespace

ValidationError::ValidationError(Errc code, std::string detail, Witness witness)
: std::runtime_error(compose_message(code, detail, witness)),
  _code(code),
  _detail(std::move(detail)),
  _witness(std::move(witness))
{}

} // namespace skb
