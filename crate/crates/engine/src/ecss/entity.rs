use std::num::NonZeroU32;

/// Entity handle: a world-unique, monotonically assigned id. Id 0 is
/// reserved for "no entity", which is why the representation is non-zero
/// (`Option<EntityId>` costs nothing).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EntityId(NonZeroU32);

impl EntityId {
    pub(crate) fn new(raw: u32) -> EntityId {
        EntityId(NonZeroU32::new(raw).expect("entity id 0 is reserved"))
    }

    pub fn raw(self) -> u32 {
        self.0.get()
    }

    pub(crate) fn index(self) -> usize {
        self.0.get() as usize
    }
}

impl std::fmt::Display for EntityId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Grouping node of the scenegraph: a name, a parent link and an ordered
/// child list. No data, no behavior; everything else lives in components.
#[derive(Debug, Clone)]
pub struct Entity {
    pub id: EntityId,
    pub name: String,
    pub parent: Option<EntityId>,
    pub children: Vec<EntityId>,
}

impl Entity {
    pub(crate) fn new(id: EntityId, name: &str) -> Entity {
        Entity { id, name: name.to_string(), parent: None, children: Vec::new() }
    }
}
