//! The 30 noun-modifier relations and their 5 groups.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Group {
    Causality,
    Temporality,
    Spatial,
    Participant,
    Quality,
}

impl Group {
    pub const ALL: [Group; 5] = [
        Group::Causality,
        Group::Temporality,
        Group::Spatial,
        Group::Participant,
        Group::Quality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Group::Causality => "causality",
            Group::Temporality => "temporality",
            Group::Spatial => "spatial",
            Group::Participant => "participant",
            Group::Quality => "quality",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelationClass {
    pub name: &'static str,
    pub abbreviation: &'static str,
    pub example: &'static str,
    pub group: Group,
}

const fn class(name: &'static str, abbreviation: &'static str, example: &'static str, group: Group) -> RelationClass {
    RelationClass {
        name,
        abbreviation,
        example,
        group,
    }
}

use Group::*;

const CLASSES: [RelationClass; 30] = [
    class("cause", "cs", "flu virus", Causality),
    class("effect", "eff", "exam anxiety", Causality),
    class("purpose", "prp", "concert hall", Causality),
    class("detraction", "detr", "headache pill", Causality),
    class("frequency", "freq", "daily exercise", Temporality),
    class("time at", "tat", "morning exercise", Temporality),
    class("time through", "tthr", "six-hour meeting", Temporality),
    class("direction", "dir", "outgoing mail", Spatial),
    class("location", "loc", "home town", Spatial),
    class("location at", "lat", "desert storm", Spatial),
    class("location from", "lfr", "foreign capital", Spatial),
    class("agent", "ag", "student protest", Participant),
    class("beneficiary", "ben", "student discount", Participant),
    class("instrument", "inst", "laser printer", Participant),
    class("object", "obj", "metal separator", Participant),
    class("object property", "obj_prop", "sunken ship", Participant),
    class("part", "part", "printer tray", Participant),
    class("possessor", "posr", "national debt", Participant),
    class("property", "prop", "blue book", Participant),
    class("product", "prod", "plum tree", Participant),
    class("source", "src", "olive oil", Participant),
    class("stative", "st", "sleeping dog", Participant),
    class("whole", "whl", "daisy chain", Participant),
    class("container", "cntr", "film music", Quality),
    class("content", "cont", "apple cake", Quality),
    class("equative", "eq", "player coach", Quality),
    class("material", "mat", "brick house", Quality),
    class("measure", "meas", "expensive book", Quality),
    class("topic", "top", "weather report", Quality),
    class("type", "type", "oak tree", Quality),
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown relation class {0:?}")]
pub struct UnknownLabel(pub String);

/// The relation classes in their canonical (grouped) order.
#[derive(Debug, Clone, Copy, Default)]
pub struct RelationTaxonomy;

impl RelationTaxonomy {
    pub fn classes(&self) -> &'static [RelationClass] {
        &CLASSES
    }

    pub fn groups(&self) -> &'static [Group] {
        &Group::ALL
    }

    pub fn class(&self, abbreviation: &str) -> Result<&'static RelationClass, UnknownLabel> {
        CLASSES
            .iter()
            .find(|c| c.abbreviation == abbreviation)
            .ok_or_else(|| UnknownLabel(abbreviation.to_string()))
    }

    pub fn group_of(&self, abbreviation: &str) -> Result<Group, UnknownLabel> {
        self.class(abbreviation).map(|c| c.group)
    }
}

/// Shorthand for [`RelationTaxonomy::group_of`].
pub fn group_of(abbreviation: &str) -> Result<Group, UnknownLabel> {
    RelationTaxonomy.group_of(abbreviation)
}

/// Which label set classification runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Granularity {
    /// The 30 relation classes.
    #[default]
    Classes,
    /// The 5 groups.
    Groups,
}

impl Granularity {
    /// Label names in report order (alphabetical).
    pub fn labels(self) -> Vec<&'static str> {
        let mut names: Vec<&'static str> = match self {
            Granularity::Classes => CLASSES.iter().map(|c| c.abbreviation).collect(),
            Granularity::Groups => Group::ALL.iter().map(|g| g.name()).collect(),
        };
        names.sort_unstable();
        names
    }

    /// Index into [`Granularity::labels`] for a class abbreviation.
    pub fn label_index(self, abbreviation: &str) -> Result<usize, UnknownLabel> {
        let class = RelationTaxonomy.class(abbreviation)?;
        let name = match self {
            Granularity::Classes => class.abbreviation,
            Granularity::Groups => class.group.name(),
        };
        Ok(self
            .labels()
            .iter()
            .position(|&l| l == name)
            .expect("every class and group has a label"))
    }
}

impl fmt::Display for Granularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Granularity::Classes => "30",
            Granularity::Groups => "5",
        })
    }
}

impl FromStr for Granularity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "30" | "classes" => Ok(Granularity::Classes),
            "5" | "groups" => Ok(Granularity::Groups),
            other => Err(format!("unknown granularity {other:?} (expected 30|5)")),
        }
    }
}
