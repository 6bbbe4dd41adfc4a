use super::entity::Entity;
use super::world::World;
use crate::components::{ComponentKey, ComponentRef};

/// Per-kind scenegraph visitor. Systems implement this to add behavior
/// without the node types knowing about them; every callback defaults to a
/// no-op so a visitor only overrides what it digests.
#[allow(unused_variables)]
pub trait Visitor {
    type Error;

    fn enter_entity(&mut self, entity: &Entity) -> Result<(), Self::Error> {
        Ok(())
    }

    fn leave_entity(&mut self, entity: &Entity) -> Result<(), Self::Error> {
        Ok(())
    }

    fn visit_basic_transform(
        &mut self,
        owner: &Entity,
        key: ComponentKey,
        component: &crate::components::BasicTransform,
    ) -> Result<(), Self::Error> {
        Ok(())
    }

    fn visit_ga_transform(
        &mut self,
        owner: &Entity,
        key: ComponentKey,
        component: &cga::GaTransform,
    ) -> Result<(), Self::Error> {
        Ok(())
    }

    fn visit_camera(
        &mut self,
        owner: &Entity,
        key: ComponentKey,
        component: &crate::components::Camera,
    ) -> Result<(), Self::Error> {
        Ok(())
    }

    fn visit_render_mesh(
        &mut self,
        owner: &Entity,
        key: ComponentKey,
        component: &crate::components::RenderMesh,
    ) -> Result<(), Self::Error> {
        Ok(())
    }

    fn visit_skinned_mesh(
        &mut self,
        owner: &Entity,
        key: ComponentKey,
        component: &crate::components::SkinnedMesh,
    ) -> Result<(), Self::Error> {
        Ok(())
    }

    fn visit_vertex_array(
        &mut self,
        owner: &Entity,
        key: ComponentKey,
        component: &crate::components::VertexArray,
    ) -> Result<(), Self::Error> {
        Ok(())
    }

    fn visit_shader_params(
        &mut self,
        owner: &Entity,
        key: ComponentKey,
        component: &crate::components::ShaderParams,
    ) -> Result<(), Self::Error> {
        Ok(())
    }
}

/// Depth-first pre-order traversal from the root: entity callback, then that
/// entity's components in attachment order, then children in insertion
/// order. Visitor errors abort the traversal and propagate.
pub fn traverse_dfs<V: Visitor>(world: &World, visitor: &mut V) -> Result<(), V::Error> {
    let Some(root) = world.root() else {
        return Ok(());
    };
    visit_entity(world, root, visitor)
}

fn visit_entity<V: Visitor>(
    world: &World,
    id: super::entity::EntityId,
    visitor: &mut V,
) -> Result<(), V::Error> {
    let Ok(entity) = world.entity(id) else {
        return Ok(());
    };
    visitor.enter_entity(entity)?;
    for key in world.attached_keys(id) {
        let Some(component) = world.component_ref(*key) else {
            continue;
        };
        match component {
            ComponentRef::BasicTransform(c) => visitor.visit_basic_transform(entity, *key, c)?,
            ComponentRef::GaTransform(c) => visitor.visit_ga_transform(entity, *key, c)?,
            ComponentRef::Camera(c) => visitor.visit_camera(entity, *key, c)?,
            ComponentRef::RenderMesh(c) => visitor.visit_render_mesh(entity, *key, c)?,
            ComponentRef::SkinnedMesh(c) => visitor.visit_skinned_mesh(entity, *key, c)?,
            ComponentRef::VertexArray(c) => visitor.visit_vertex_array(entity, *key, c)?,
            ComponentRef::ShaderParams(c) => visitor.visit_shader_params(entity, *key, c)?,
        }
    }
    for child in &entity.children {
        visit_entity(world, *child, visitor)?;
    }
    visitor.leave_entity(entity)?;
    Ok(())
}
