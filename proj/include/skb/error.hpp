#ifndef SKB_ERROR_HPP
#define SKB_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skb
{

/// Element (or set point) index. Every finite structure lives on 0..n-1.
using Elem = std::uint32_t;

/// A counterexample tuple, in the argument order of the violated identity.
using Witness = std::vector<Elem>;

enum class Errc
{
  OutOfRange,
  BadUnit,
  NotLatin,
  NoInverse,
  NotAssociative,
  NotAction,
  NotEndomorphism,
  OrderMismatch,
  UnitMismatch,
  DistributivityFailed,
  OrderTooLarge,
  InternalLemmaViolation,
  InternalAxiomViolation,
  AxiomsFailed,
  ResultNotBrace,
  NotSubgroup,
  CocycleFailed,
  NotEquivariant,
  InvalidAction,
  NotBraided,
  NotGeneralizedBraided,
  NotBraidCommuting,
  InternalInvariantViolation,
};

std::string_view to_string(Errc code);

/// Structured failure raised by every validator and constructor.
///
/// `detail` is a short human-readable qualifier (e.g. "row 1"), `witness`
/// the offending tuple when one exists.
class ValidationError : public std::runtime_error
{
public:
  ValidationError(Errc code, std::string detail, Witness witness = {});

  Errc code() const noexcept { return _code; }
  std::string const &detail() const noexcept { return _detail; }
  Witness const &witness() const noexcept { return _witness; }

private:
  Errc _code;
  std::string _detail;
  Witness _witness;
};

std::string format_witness(Witness const &w);

} // namespace skb

#endif // SKB_ERROR_HPP
