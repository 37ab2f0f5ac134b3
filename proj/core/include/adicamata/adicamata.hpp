#pragma once

#include "adicamata/adic.hpp"
#include "adicamata/biminimality.hpp"
#include "adicamata/dimension_group.hpp"
#include "adicamata/odometer.hpp"
#include "adicamata/pipeline.hpp"
#include "adicamata/safety_automaton.hpp"
#include "adicamata/serialize.hpp"
#include "adicamata/transducer.hpp"
#include "adicamata/words.hpp"
