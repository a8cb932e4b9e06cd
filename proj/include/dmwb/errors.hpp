#pragma once

#include <stdexcept>
#include <string>

namespace dmwb {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NonPositiveOrder : public Error { public: using Error::Error; };
class InvalidSignature : public Error { public: using Error::Error; };
class CollapsedDivisor : public Error { public: using Error::Error; };
class NotHyperbolic : public Error { public: using Error::Error; };
class Unclassified : public Error { public: using Error::Error; };
class UnknownGenerator : public Error { public: using Error::Error; };
class BasePoint : public Error { public: using Error::Error; };
class NotMarkedPoint : public Error { public: using Error::Error; };
class DegenerateConfig : public Error { public: using Error::Error; };
class DegenerateAngles : public Error { public: using Error::Error; };
class DegenerateDenominator : public Error { public: using Error::Error; };
class Indeterminate : public Error { public: using Error::Error; };
class OutOfRange : public Error { public: using Error::Error; };
class CollapsedFiberPoint : public Error { public: using Error::Error; };
class InvalidMappingClass : public Error { public: using Error::Error; };
class MalformedDataset : public Error { public: using Error::Error; };

} // namespace dmwb
