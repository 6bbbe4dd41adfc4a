use std::collections::HashMap;

use math3d::Mat4;

use super::entity::{Entity, EntityId};
use super::event::{Event, EventBus, Listener, PublishError, SubscriptionId};
use crate::components::{
    BasicTransform, Camera, Component, ComponentKey, ComponentKind, ComponentRef, RenderMesh,
    ShaderParams, SkinnedMesh, VertexArray,
};
use cga::GaTransform;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum EcssError {
    #[error("unknown or dead entity {0}")]
    UnknownEntity(EntityId),
    #[error("attaching {child} under {parent} would create a cycle")]
    Cycle { parent: EntityId, child: EntityId },
    #[error("entity {0} already has a parent and reparenting is disabled")]
    AlreadyParented(EntityId),
    #[error("the root entity cannot be attached as a child")]
    RootChild,
    #[error("the root entity cannot be removed")]
    RootRemoval,
    #[error("entity {owner} already has a {kind:?} component")]
    DuplicateComponent { owner: EntityId, kind: ComponentKind },
}

struct EntitySlot {
    entity: Entity,
    attached: Vec<ComponentKey>,
    alive: bool,
}

/// Columnar storage for one component kind: dense data plus a per-owner
/// index holding the dense positions in attachment order.
struct Column<T> {
    owners: Vec<EntityId>,
    data: Vec<T>,
    by_owner: HashMap<EntityId, Vec<usize>>,
}

impl<T> Default for Column<T> {
    fn default() -> Self {
        Column { owners: Vec::new(), data: Vec::new(), by_owner: HashMap::new() }
    }
}

impl<T> Column<T> {
    /// Appends and returns the slot index within (owner, kind).
    fn push(&mut self, owner: EntityId, value: T) -> usize {
        let dense = self.data.len();
        self.owners.push(owner);
        self.data.push(value);
        let slots = self.by_owner.entry(owner).or_default();
        slots.push(dense);
        slots.len() - 1
    }

    fn count(&self, owner: EntityId) -> usize {
        self.by_owner.get(&owner).map_or(0, Vec::len)
    }

    fn get(&self, owner: EntityId, slot: usize) -> Option<&T> {
        let dense = *self.by_owner.get(&owner)?.get(slot)?;
        Some(&self.data[dense])
    }

    fn get_mut(&mut self, owner: EntityId, slot: usize) -> Option<&mut T> {
        let dense = *self.by_owner.get(&owner)?.get(slot)?;
        Some(&mut self.data[dense])
    }

    fn remove_owner(&mut self, owner: EntityId) {
        if !self.by_owner.contains_key(&owner) {
            return;
        }
        let mut keep = self.owners.iter().map(|o| *o != owner);
        self.data.retain(|_| keep.next().unwrap());
        self.owners.retain(|o| *o != owner);
        self.by_owner.clear();
        for (dense, o) in self.owners.iter().enumerate() {
            self.by_owner.entry(*o).or_default().push(dense);
        }
    }
}

/// The scenegraph container: entity arena, per-kind columnar component
/// stores, derived transform tables and the event bus.
///
/// The first entity ever created becomes the root; entities created later
/// float outside the tree until attached with [`World::add_entity_child`].
/// Entity ids are never reused, deletion only tombstones.
pub struct World {
    slots: Vec<Option<EntitySlot>>,
    root: Option<EntityId>,
    allow_reparent: bool,

    basic_transforms: Column<BasicTransform>,
    ga_transforms: Column<GaTransform>,
    cameras: Column<Camera>,
    render_meshes: Column<RenderMesh>,
    skinned_meshes: Column<SkinnedMesh>,
    vertex_arrays: Column<VertexArray>,
    shader_params: Column<ShaderParams>,

    /// Local-to-world per entity slot, filled by the transform system.
    l2w_table: Vec<Mat4>,
    /// projection * root2cam * l2w per entity slot, filled by the camera system.
    l2cam_table: Vec<Mat4>,

    bus: EventBus,
}

impl Default for World {
    fn default() -> Self {
        World::new()
    }
}

impl World {
    pub fn new() -> World {
        World {
            slots: vec![None], // index 0 reserved
            root: None,
            allow_reparent: false,
            basic_transforms: Column::default(),
            ga_transforms: Column::default(),
            cameras: Column::default(),
            render_meshes: Column::default(),
            skinned_meshes: Column::default(),
            vertex_arrays: Column::default(),
            shader_params: Column::default(),
            l2w_table: vec![Mat4::IDENTITY],
            l2cam_table: vec![Mat4::IDENTITY],
            bus: EventBus::default(),
        }
    }

    /// Permits `add_entity_child` to detach a child from its current parent.
    pub fn set_reparenting(&mut self, allowed: bool) {
        self.allow_reparent = allowed;
    }

    // ------------------------------------------------------------------
    // entities
    // ------------------------------------------------------------------

    pub fn create_entity(&mut self, name: &str) -> EntityId {
        let id = EntityId::new(self.slots.len() as u32);
        self.slots.push(Some(EntitySlot {
            entity: Entity::new(id, name),
            attached: Vec::new(),
            alive: true,
        }));
        self.l2w_table.push(Mat4::IDENTITY);
        self.l2cam_table.push(Mat4::IDENTITY);
        if self.root.is_none() {
            self.root = Some(id);
        }
        id
    }

    pub fn root(&self) -> Option<EntityId> {
        self.root
    }

    pub fn is_alive(&self, id: EntityId) -> bool {
        self.slot(id).is_some()
    }

    pub fn entity(&self, id: EntityId) -> Result<&Entity, EcssError> {
        self.slot(id).map(|s| &s.entity).ok_or(EcssError::UnknownEntity(id))
    }

    fn slot(&self, id: EntityId) -> Option<&EntitySlot> {
        self.slots.get(id.index()).and_then(|s| s.as_ref()).filter(|s| s.alive)
    }

    fn slot_mut(&mut self, id: EntityId) -> Option<&mut EntitySlot> {
        self.slots.get_mut(id.index()).and_then(|s| s.as_mut()).filter(|s| s.alive)
    }

    pub fn add_entity_child(&mut self, parent: EntityId, child: EntityId) -> Result<(), EcssError> {
        if !self.is_alive(parent) {
            return Err(EcssError::UnknownEntity(parent));
        }
        if !self.is_alive(child) {
            return Err(EcssError::UnknownEntity(child));
        }
        if Some(child) == self.root {
            return Err(EcssError::RootChild);
        }
        // parent == child, or parent sits below child in the tree
        let mut cursor = Some(parent);
        while let Some(id) = cursor {
            if id == child {
                return Err(EcssError::Cycle { parent, child });
            }
            cursor = self.slot(id).and_then(|s| s.entity.parent);
        }
        if let Some(old) = self.slot(child).and_then(|s| s.entity.parent) {
            if !self.allow_reparent {
                return Err(EcssError::AlreadyParented(child));
            }
            if let Some(slot) = self.slot_mut(old) {
                slot.entity.children.retain(|c| *c != child);
            }
        }
        self.slot_mut(parent).unwrap().entity.children.push(child);
        self.slot_mut(child).unwrap().entity.parent = Some(parent);
        Ok(())
    }

    /// Tombstones the entity and its whole subtree; ids are never reused and
    /// all owned components are dropped.
    pub fn remove_entity(&mut self, id: EntityId) -> Result<(), EcssError> {
        if !self.is_alive(id) {
            return Err(EcssError::UnknownEntity(id));
        }
        if Some(id) == self.root {
            return Err(EcssError::RootRemoval);
        }
        if let Some(parent) = self.slot(id).and_then(|s| s.entity.parent) {
            if let Some(slot) = self.slot_mut(parent) {
                slot.entity.children.retain(|c| *c != id);
            }
        }
        let mut pending = vec![id];
        while let Some(cur) = pending.pop() {
            if let Some(slot) = self.slot_mut(cur) {
                slot.alive = false;
                pending.extend(slot.entity.children.iter().copied());
            }
            self.basic_transforms.remove_owner(cur);
            self.ga_transforms.remove_owner(cur);
            self.cameras.remove_owner(cur);
            self.render_meshes.remove_owner(cur);
            self.skinned_meshes.remove_owner(cur);
            self.vertex_arrays.remove_owner(cur);
            self.shader_params.remove_owner(cur);
        }
        Ok(())
    }

    /// Live entities of the root's tree in pre-order (parents before
    /// children, children in insertion order). Floating entities that were
    /// never attached are not part of the tree and are not listed.
    pub fn preorder_ids(&self) -> Vec<EntityId> {
        let mut out = Vec::new();
        let Some(root) = self.root else {
            return out;
        };
        let mut stack = vec![root];
        while let Some(id) = stack.pop() {
            let Some(slot) = self.slot(id) else { continue };
            out.push(id);
            stack.extend(slot.entity.children.iter().rev().copied());
        }
        out
    }

    // ------------------------------------------------------------------
    // components
    // ------------------------------------------------------------------

    pub fn add_component(
        &mut self,
        owner: EntityId,
        component: Component,
    ) -> Result<ComponentKey, EcssError> {
        if !self.is_alive(owner) {
            return Err(EcssError::UnknownEntity(owner));
        }
        let kind = component.kind();
        match kind {
            // at most one transform (of either representation) per entity
            ComponentKind::BasicTransform | ComponentKind::GaTransform => {
                if self.basic_transforms.count(owner) + self.ga_transforms.count(owner) > 0 {
                    return Err(EcssError::DuplicateComponent { owner, kind });
                }
            }
            ComponentKind::Camera => {
                if self.cameras.count(owner) > 0 {
                    return Err(EcssError::DuplicateComponent { owner, kind });
                }
            }
            _ => {}
        }
        let slot = match component {
            Component::BasicTransform(c) => self.basic_transforms.push(owner, c),
            Component::GaTransform(c) => self.ga_transforms.push(owner, c),
            Component::Camera(c) => self.cameras.push(owner, c),
            Component::RenderMesh(c) => self.render_meshes.push(owner, c),
            Component::SkinnedMesh(c) => self.skinned_meshes.push(owner, c),
            Component::VertexArray(c) => self.vertex_arrays.push(owner, c),
            Component::ShaderParams(c) => self.shader_params.push(owner, c),
        };
        let key = ComponentKey { owner, kind, slot };
        self.slot_mut(owner).unwrap().attached.push(key);
        Ok(key)
    }

    /// First component of `kind` on `owner`, if any.
    pub fn get_component(
        &self,
        owner: EntityId,
        kind: ComponentKind,
    ) -> Result<Option<ComponentRef<'_>>, EcssError> {
        self.get_component_slot(owner, kind, 0)
    }

    pub fn get_component_slot(
        &self,
        owner: EntityId,
        kind: ComponentKind,
        slot: usize,
    ) -> Result<Option<ComponentRef<'_>>, EcssError> {
        if !self.is_alive(owner) {
            return Err(EcssError::UnknownEntity(owner));
        }
        Ok(self.component_ref(ComponentKey { owner, kind, slot }))
    }

    pub(crate) fn component_ref(&self, key: ComponentKey) -> Option<ComponentRef<'_>> {
        let ComponentKey { owner, kind, slot } = key;
        match kind {
            ComponentKind::BasicTransform => {
                self.basic_transforms.get(owner, slot).map(ComponentRef::BasicTransform)
            }
            ComponentKind::GaTransform => {
                self.ga_transforms.get(owner, slot).map(ComponentRef::GaTransform)
            }
            ComponentKind::Camera => self.cameras.get(owner, slot).map(ComponentRef::Camera),
            ComponentKind::RenderMesh => {
                self.render_meshes.get(owner, slot).map(ComponentRef::RenderMesh)
            }
            ComponentKind::SkinnedMesh => {
                self.skinned_meshes.get(owner, slot).map(ComponentRef::SkinnedMesh)
            }
            ComponentKind::VertexArray => {
                self.vertex_arrays.get(owner, slot).map(ComponentRef::VertexArray)
            }
            ComponentKind::ShaderParams => {
                self.shader_params.get(owner, slot).map(ComponentRef::ShaderParams)
            }
        }
    }

    /// Component keys attached to `owner`, in attachment order.
    pub fn attached_keys(&self, owner: EntityId) -> &[ComponentKey] {
        self.slot(owner).map(|s| s.attached.as_slice()).unwrap_or(&[])
    }

    pub fn component_count(&self, owner: EntityId, kind: ComponentKind) -> usize {
        match kind {
            ComponentKind::BasicTransform => self.basic_transforms.count(owner),
            ComponentKind::GaTransform => self.ga_transforms.count(owner),
            ComponentKind::Camera => self.cameras.count(owner),
            ComponentKind::RenderMesh => self.render_meshes.count(owner),
            ComponentKind::SkinnedMesh => self.skinned_meshes.count(owner),
            ComponentKind::VertexArray => self.vertex_arrays.count(owner),
            ComponentKind::ShaderParams => self.shader_params.count(owner),
        }
    }

    /// Owners stored across all component columns; used to check the
    /// ownership-closure invariant.
    pub fn component_owners(&self) -> Vec<EntityId> {
        let mut owners = Vec::new();
        owners.extend_from_slice(&self.basic_transforms.owners);
        owners.extend_from_slice(&self.ga_transforms.owners);
        owners.extend_from_slice(&self.cameras.owners);
        owners.extend_from_slice(&self.render_meshes.owners);
        owners.extend_from_slice(&self.skinned_meshes.owners);
        owners.extend_from_slice(&self.vertex_arrays.owners);
        owners.extend_from_slice(&self.shader_params.owners);
        owners
    }

    // typed accessors -- the systems' working surface

    pub fn basic_transform(&self, id: EntityId) -> Option<&BasicTransform> {
        self.basic_transforms.get(id, 0)
    }

    pub fn basic_transform_mut(&mut self, id: EntityId) -> Option<&mut BasicTransform> {
        self.basic_transforms.get_mut(id, 0)
    }

    pub fn ga_transform(&self, id: EntityId) -> Option<&GaTransform> {
        self.ga_transforms.get(id, 0)
    }

    pub fn camera(&self, id: EntityId) -> Option<&Camera> {
        self.cameras.get(id, 0)
    }

    pub fn camera_mut(&mut self, id: EntityId) -> Option<&mut Camera> {
        self.cameras.get_mut(id, 0)
    }

    pub fn render_mesh(&self, id: EntityId, slot: usize) -> Option<&RenderMesh> {
        self.render_meshes.get(id, slot)
    }

    pub fn render_mesh_mut(&mut self, id: EntityId, slot: usize) -> Option<&mut RenderMesh> {
        self.render_meshes.get_mut(id, slot)
    }

    pub fn skinned_mesh(&self, id: EntityId, slot: usize) -> Option<&SkinnedMesh> {
        self.skinned_meshes.get(id, slot)
    }

    pub fn skinned_mesh_mut(&mut self, id: EntityId, slot: usize) -> Option<&mut SkinnedMesh> {
        self.skinned_meshes.get_mut(id, slot)
    }

    pub fn vertex_array(&self, id: EntityId, slot: usize) -> Option<&VertexArray> {
        self.vertex_arrays.get(id, slot)
    }

    pub fn vertex_array_mut(&mut self, id: EntityId, slot: usize) -> Option<&mut VertexArray> {
        self.vertex_arrays.get_mut(id, slot)
    }

    pub fn shader_params(&self, id: EntityId, slot: usize) -> Option<&ShaderParams> {
        self.shader_params.get(id, slot)
    }

    /// The entity's local matrix: from its BasicTransform, or its GaTransform
    /// (cached motor matrix), or identity when it is a bare grouping node.
    pub fn local_matrix(&self, id: EntityId) -> Mat4 {
        if let Some(bt) = self.basic_transform(id) {
            bt.local
        } else if let Some(ga) = self.ga_transform(id) {
            *ga.matrix()
        } else {
            Mat4::IDENTITY
        }
    }

    // derived tables, written by the transform/camera systems

    pub fn l2w(&self, id: EntityId) -> Mat4 {
        self.l2w_table.get(id.index()).copied().unwrap_or(Mat4::IDENTITY)
    }

    pub(crate) fn set_l2w(&mut self, id: EntityId, m: Mat4) {
        self.l2w_table[id.index()] = m;
    }

    pub fn l2cam(&self, id: EntityId) -> Mat4 {
        self.l2cam_table.get(id.index()).copied().unwrap_or(Mat4::IDENTITY)
    }

    pub(crate) fn set_l2cam(&mut self, id: EntityId, m: Mat4) {
        self.l2cam_table[id.index()] = m;
    }

    // ------------------------------------------------------------------
    // event bus
    // ------------------------------------------------------------------

    pub fn subscribe(&mut self, topic: &str, listener: Listener) -> SubscriptionId {
        self.bus.subscribe(topic, listener)
    }

    pub fn publish(&mut self, event: &Event) -> Result<(), PublishError> {
        self.bus.publish(event)
    }
}

impl std::fmt::Debug for World {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("World")
            .field("entities", &(self.slots.len() - 1))
            .field("root", &self.root)
            .finish()
    }
}
