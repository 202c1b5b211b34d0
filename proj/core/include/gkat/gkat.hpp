#pragma once

#include "gkat/alphabet.hpp"
#include "gkat/automaton.hpp"
#include "gkat/bench.hpp"
#include "gkat/closure.hpp"
#include "gkat/derivative.hpp"
#include "gkat/dfa.hpp"
#include "gkat/errors.hpp"
#include "gkat/expr.hpp"
#include "gkat/gl_star.hpp"
#include "gkat/guarded.hpp"
#include "gkat/io.hpp"
#include "gkat/l_star.hpp"
#include "gkat/moore.hpp"
#include "gkat/regex.hpp"
#include "gkat/succinct.hpp"
#include "gkat/teacher.hpp"
#include "gkat/transcript.hpp"
