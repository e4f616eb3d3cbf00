#pragma once

#include "aritylab/limits.hpp"
#include "aritylab/tuples.hpp"
#include "aritylab/core.hpp"
#include "aritylab/formula.hpp"
#include "aritylab/parser.hpp"
#include "aritylab/eval.hpp"
#include "aritylab/perm.hpp"
#include "aritylab/group.hpp"
#include "aritylab/aut_search.hpp"
#include "aritylab/orbits.hpp"
#include "aritylab/oracle.hpp"
#include "aritylab/arity.hpp"
#include "aritylab/factory.hpp"
#include "aritylab/algebra.hpp"
#include "aritylab/dsl.hpp"
#include "aritylab/corpus.hpp"
#include "aritylab/config.hpp"
