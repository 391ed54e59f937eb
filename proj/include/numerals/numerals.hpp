#pragma once

#include "numerals/catalog.hpp"
#include "numerals/convert.hpp"
#include "numerals/digit_forms.hpp"
#include "numerals/errors.hpp"
#include "numerals/expression.hpp"
#include "numerals/gap.hpp"
#include "numerals/greek.hpp"
#include "numerals/indic.hpp"
#include "numerals/integer.hpp"
#include "numerals/pedagogy.hpp"
#include "numerals/rational.hpp"
#include "numerals/roman.hpp"
#include "numerals/rules.hpp"
#include "numerals/system.hpp"
#include "numerals/value.hpp"
